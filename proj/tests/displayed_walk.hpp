#ifndef GZKIT_TESTS_DISPLAYED_WALK_HPP
#define GZKIT_TESTS_DISPLAYED_WALK_HPP

// The displayed lattice walk, verbatim LaTeX.
inline constexpr const char* kDisplayedWalk = R"((0,0,0,0)\overset{1}{\to}(1,0,0,0)
\overset{1}{\to} (2,0,0,0)
\overset{1}{\to} (3,0,0,0)
\overset{1}{\to} (4,0,0,0)
\overset{1}{\to} (4,0,0,0)
\overset{1}{\to} \\
(5,0,0,0)
\overset{1}{\to} (6,0,0,0)
\overset{1}{\to} (6,1,0,0)
\overset{1}{\to} (6,2,0,0)
\overset{1}{\to} (6,3,0,0)
\overset{1}{\to} (6,4,0,0)
\overset{1}{\to} \\(6,5,0,0)
\overset{1}{\to} (6,5,1,0)
\overset{1}{\to} (6,5,2,0)
\overset{1}{\to} (6,5,3,0)
\overset{1}{\to} (6,5,4,0)
\overset{1}{\to} (6,5,4,1)
\overset{1}{\to} \\(6,5,4,2)
\overset{1}{\to} (6,5,4,3)
\overset{1}{\to} (6,5,4,2)
\overset{1}{\to} (6,5,4,1)
\overset{1}{\to} (6,5,3,1)
\overset{1}{\to} (6,5,2,1)
\overset{2}{\to} \\(6,5,1,1)
\overset{1}{\to} (6,4,1,1)
\overset{1}{\to} (6,3,1,1)
\overset{1}{\to} (6,2,1,1)
\overset{1}{\to} (5,2,1,1)
\overset{1}{\to} (4,2,1,1)
\overset{1}{\to} \\(3,2,1,1)
\overset{2}{\to} (2,2,1,1))";

#endif
