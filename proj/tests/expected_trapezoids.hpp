#pragma once

// Drawn level-2 and level-3 trapezoids of the 2-shift diagram with widths
// {1}, transcribed row by row (row 1 first, bars left of their cell).

#include <string>
#include <vector>

namespace expected {

inline const std::vector<std::string> level2 = {
    "0|0|0\n |0|",     "0|0|1\n |0|",     "1|0|0\n |0|",     "0|1|0|1\n |1 0|",
    "0|1|0|0\n |1 0|", "1|1|0|0\n |1 0|", "1|1|0|1\n |1 0|", "0|1|0\n |1|",
    "0|1|1\n |1|",     "1|1|0\n |1|",     "1|1|1\n |1|",
};

inline const std::vector<std::string> level3 = {
    "0|0|0\n |0|\n |0|",
    "0|0|1\n |0|\n |0|",
    "1|0|0\n |0|\n |0|",
    "0|1|0|1\n |1 0|\n |1 0|",
    "0|1|0|0|0\n |1|0|0|\n |1 0 0|",
    "0|1|0|0|1\n |1 0|0|\n |1 0 0|",
    "1|1|0|0|0\n |1|0|0|\n |1 0 0|",
    "1|1|0|0|1\n |1 0|0|\n |1 0 0|",
    "0|1|1|0|1\n |1|1 0|\n |1 1 0|",
    "1|1|1|0|1\n |1|1 0|\n |1 1 0|",
    "1|1|0|1\n |1 0|\n |1 0|",
    "0|1|0\n |1|\n |1|",
    "0|1|1\n |1|\n |1|",
    "1|1|0\n |1|\n |1|",
    "1|1|1\n |1|\n |1|",
};

}  // namespace expected
