#include "appendix_tables.hpp"

namespace hypercone::detail {

namespace {

constexpr int kQ1[] = {0, -1, 0, -1, 0, 1, -1, 1, 0, 1, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 1, 0, 0, 0, -1, 0, 0};
constexpr std::uint32_t kF1[] = {
    0, 1, 1, 3, 4, 5, 0, 1, 2, 3, 3, 11, 6, 7, 2, 3,
    1, 5, 5, 1, 5, 21, 1, 5, 0, 1, 1, 3, 4, 5, 0, 1,
    4, 0, 5, 1, 6, 4, 4, 0, 6, 2, 7, 3, 38, 6, 6, 2,
    5, 1, 13, 5, 4, 5, 5, 1, 4, 0, 5, 1, 6, 4, 4, 0,
};

constexpr int kQ2[] = {0, -1, 0, 0, -1, 1, -1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 0, -1, 0, -1, 0, 0, -1, 0, 0};
constexpr std::uint32_t kF2[] = {
    0, 2, 1, 3, 1, 3, 3, 7, 1, 3, 5, 7, 3, 11, 1, 3,
    4, 6, 5, 7, 0, 2, 1, 3, 5, 7, 21, 5, 1, 3, 5, 7,
    2, 6, 3, 7, 3, 7, 11, 3, 0, 2, 1, 3, 1, 3, 3, 3,
    6, 38, 7, 6, 2, 6, 3, 7, 4, 6, 5, 7, 0, 2, 1, 3,
};

constexpr int kQ3[] = {0, -1, 0, 0, 0, 1, -1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 1, -1, 0, 1, 1, 0, 0, -1, -1, 0, 0};
constexpr std::uint32_t kF3[] = {
    0, 1, 2, 3, 1, 3, 3, 11, 1, 5, 3, 7, 3, 7, 7, 15,
    4, 5, 6, 7, 0, 1, 2, 3, 5, 21, 7, 5, 1, 5, 3, 7,
    2, 0, 6, 2, 3, 1, 7, 3, 3, 1, 7, 3, 19, 3, 3, 7,
    6, 4, 38, 6, 2, 0, 6, 2, 7, 5, 6, 7, 3, 1, 7, 3,
};

constexpr int kQ4[] = {-2, -2, 0, 0, 0, 2, 1, 1, 1, 1, 1, 1, 0, 0, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0};
constexpr std::uint32_t kF4[] = {
    0, 2, 4, 6, 8, 10, 12, 14, 2, 3, 0, 2, 0, 2, 4, 6,
    4, 0, 5, 4, 0, 2, 4, 6, 6, 2, 4, 0, 2, 0, 0, 2,
    8, 0, 0, 2, 9, 8, 8, 10, 10, 2, 2, 0, 8, 0, 0, 2,
    12, 4, 4, 0, 8, 0, 0, 2, 14, 6, 6, 2, 10, 2, 2, 0,
    6, 14, 14, 30, 14, 30, 30, 62, 14, 6, 6, 14, 6, 14, 14, 30,
    14, 6, 6, 14, 6, 14, 14, 30, 78, 14, 14, 6, 14, 6, 6, 14,
    14, 6, 6, 14, 10, 14, 14, 30, 78, 14, 14, 6, 14, 6, 6, 14,
    78, 14, 14, 6, 14, 6, 6, 14, 206, 78, 78, 14, 78, 14, 14, 6,
};

constexpr int kQ5[] = {-1, -2, 0, 0, 0, 2, -1, 1, 1, 1, 1, 1, 0, 0, -1, 0, -1, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0};
constexpr std::uint32_t kF5[] = {
    0, 1, 1, 3, 1, 5, 3, 1, 1, 17, 3, 1, 5, 1, 7, 3,
    2, 3, 3, 11, 0, 1, 1, 3, 0, 1, 1, 3, 1, 1, 3, 1,
    4, 5, 0, 1, 5, 13, 1, 5, 0, 1, 1, 1, 1, 5, 3, 1,
    6, 7, 2, 3, 4, 5, 0, 1, 2, 3, 0, 1, 0, 1, 1, 0,
    6, 2, 7, 3, 7, 3, 39, 7, 7, 3, 39, 7, 39, 7, 103, 39,
    22, 6, 6, 2, 6, 2, 7, 3, 6, 2, 7, 3, 7, 3, 39, 7,
    22, 6, 6, 2, 6, 7, 7, 3, 6, 2, 7, 3, 7, 3, 39, 7,
    150, 22, 22, 6, 22, 6, 6, 2, 22, 6, 6, 2, 6, 2, 7, 3,
};

constexpr int kQ6[] = {-1, 0, -1, -1, 0, 1, 1, 1, 1, 1, 0, -1, 1, 0, 1, -1, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
constexpr std::uint32_t kF6[] = {
    0, 1, 2, 3, 4, 0, 6, 2, 1, 9, 0, 1, 0, 1, 2, 0,
    1, 3, 3, 19, 0, 1, 2, 3, 3, 1, 1, 3, 1, 0, 0, 1,
    2, 0, 6, 2, 6, 2, 38, 6, 3, 1, 2, 0, 2, 0, 6, 2,
    3, 1, 2, 3, 2, 0, 6, 2, 7, 3, 3, 1, 3, 1, 2, 0,
    4, 0, 0, 1, 12, 4, 4, 0, 5, 1, 1, 0, 4, 0, 0, 0,
    5, 1, 1, 3, 4, 0, 0, 1, 7, 3, 3, 1, 5, 1, 1, 0,
    6, 2, 2, 0, 4, 0, 6, 2, 7, 3, 3, 1, 6, 2, 2, 0,
    7, 3, 3, 1, 6, 2, 2, 0, 71, 7, 7, 3, 7, 3, 3, 1,
};

constexpr int kQ7[] = {0, -1, -1, -1, 0, 1, 1, 1, -1, 1, 1, 0, 0, 1, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0};
constexpr std::uint32_t kF7[] = {
    0, 1, 1, 9, 2, 3, 0, 1, 4, 0, 5, 1, 6, 2, 4, 0,
    2, 3, 0, 1, 3, 19, 1, 3, 0, 1, 1, 0, 2, 3, 0, 1,
    4, 0, 5, 1, 0, 1, 1, 0, 5, 1, 37, 5, 4, 0, 5, 1,
    6, 2, 4, 0, 2, 3, 0, 1, 4, 0, 5, 1, 0, 1, 1, 0,
    2, 0, 0, 1, 6, 2, 2, 0, 6, 2, 4, 0, 70, 6, 6, 2,
    6, 2, 2, 0, 2, 3, 0, 1, 2, 0, 0, 0, 6, 2, 2, 0,
    6, 2, 4, 0, 2, 0, 0, 0, 4, 0, 5, 1, 6, 2, 4, 0,
    14, 6, 6, 2, 6, 2, 2, 0, 6, 2, 4, 0, 2, 0, 0, 0,
};

constexpr int kQ8[] = {0, 0, 0, -1, 0, 0, 0, 1, 0, -1, 0, -1, 0, 0, 0, 1, -1, 1, 0, -1, 0, 1, 2, 1, 1, 0, -1, 0, 0, -2, 0};
constexpr std::uint32_t kF8[] = {
    0, 1, 1, 3, 3, 7, 7, 15, 1, 3, 3, 19, 7, 15, 23, 7,
    4, 5, 5, 7, 7, 15, 39, 47, 5, 7, 7, 23, 23, 7, 55, 39,
    4, 5, 5, 7, 7, 15, 23, 7, 5, 7, 7, 23, 71, 79, 87, 71,
    20, 21, 21, 23, 23, 7, 55, 39, 21, 23, 23, 7, 87, 71, 119, 103,
    16, 17, 17, 19, 1, 3, 3, 7, 17, 19, 19, 147, 3, 7, 7, 3,
    20, 21, 21, 23, 5, 7, 7, 15, 21, 23, 23, 19, 7, 7, 23, 7,
    20, 21, 21, 23, 5, 7, 7, 7, 21, 23, 23, 19, 7, 15, 23, 7,
    28, 29, 29, 31, 21, 5, 23, 7, 29, 31, 21, 23, 23, 7, 55, 39,
};

constexpr int kQ9[] = {0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, -1, 0, 1, 1, 0, 0, 1, 1, 1, 1, -1, 1, -1, -1, 0, -1, 0, 0};
constexpr std::uint32_t kF9[] = {
    0, 1, 2, 3, 4, 5, 6, 7, 1, 9, 3, 11, 5, 13, 7, 15,
    1, 3, 3, 19, 5, 7, 7, 23, 3, 11, 11, 27, 7, 15, 15, 31,
    4, 5, 6, 7, 12, 13, 14, 15, 5, 13, 7, 15, 13, 77, 15, 13,
    5, 7, 7, 3, 13, 5, 15, 7, 7, 15, 15, 11, 5, 13, 7, 15,
    2, 3, 6, 7, 6, 7, 38, 39, 3, 11, 7, 3, 7, 15, 6, 7,
    3, 7, 7, 23, 7, 23, 39, 55, 7, 3, 3, 19, 7, 7, 7, 23,
    6, 7, 14, 15, 14, 15, 46, 47, 7, 15, 15, 7, 15, 79, 14, 15,
    7, 7, 15, 7, 15, 7, 47, 39, 71, 7, 7, 3, 7, 15, 15, 7,
};

constexpr int kQ10[] = {0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, 0, -1, 0, 0, 1, 1, 0, 1, 0, 0, 2, 1, 1, 1, -2, 0, 0, 0, -2, 0};
constexpr std::uint32_t kF10[] = {
    0, 1, 1, 3, 1, 3, 3, 131, 3, 7, 7, 15, 7, 15, 15, 7,
    4, 5, 5, 7, 5, 7, 7, 135, 7, 15, 15, 31, 15, 31, 7, 15,
    4, 5, 5, 7, 5, 7, 7, 135, 7, 15, 15, 47, 15, 7, 47, 15,
    12, 13, 13, 15, 13, 5, 15, 7, 15, 31, 47, 63, 7, 15, 15, 31,
    4, 5, 5, 7, 5, 7, 7, 135, 7, 15, 15, 15, 15, 79, 79, 15,
    12, 13, 13, 15, 13, 15, 15, 143, 15, 31, 13, 15, 79, 95, 15, 31,
    12, 13, 13, 15, 13, 15, 15, 143, 15, 15, 47, 15, 79, 15, 111, 79,
    140, 141, 141, 143, 141, 13, 143, 15, 13, 15, 15, 31, 15, 31, 47, 15,
};

constexpr int kQ11[] = {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, -1, 1, 1, 0, 0, -1, 1, 1, 1, 1, 1, -1, 0, -1, 0, -1, 0};
constexpr std::uint32_t kF11[] = {
    0, 1, 1, 3, 1, 9, 3, 11, 1, 5, 3, 7, 5, 13, 7, 15,
    2, 3, 3, 19, 3, 11, 11, 27, 3, 7, 7, 23, 7, 15, 15, 31,
    2, 3, 3, 7, 3, 11, 7, 3, 3, 7, 7, 39, 7, 15, 39, 7,
    6, 7, 7, 23, 7, 3, 3, 19, 7, 23, 39, 55, 7, 7, 7, 23,
    4, 5, 5, 7, 5, 13, 7, 15, 5, 13, 7, 15, 69, 77, 71, 79,
    6, 7, 7, 3, 7, 15, 15, 11, 7, 15, 7, 7, 5, 13, 7, 15,
    6, 7, 7, 7, 7, 15, 39, 7, 7, 15, 39, 7, 71, 79, 103, 71,
    14, 15, 15, 7, 15, 7, 7, 3, 15, 7, 7, 39, 7, 15, 39, 7,
};

constexpr int kQ12[] = {-2, 0, 0, 0, -2, 2, 1, 1, 1, -1, -1, 2, 0, 1, 1, 0, 0, -2, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0};
constexpr std::uint32_t kF12[] = {
    0, 1, 1, 3, 1, 3, 5, 1, 5, 13, 13, 5, 13, 5, 77, 13,
    4, 0, 5, 1, 5, 1, 13, 5, 13, 5, 77, 13, 77, 13, 205, 77,
    2, 3, 3, 19, 0, 1, 1, 3, 1, 5, 5, 1, 5, 1, 13, 5,
    6, 2, 7, 3, 4, 0, 5, 1, 5, 1, 13, 5, 13, 5, 77, 13,
    2, 3, 0, 1, 3, 35, 1, 3, 1, 5, 5, 1, 5, 1, 13, 5,
    6, 2, 4, 0, 7, 3, 5, 1, 5, 1, 13, 5, 13, 5, 77, 13,
    6, 2, 2, 3, 2, 3, 0, 1, 0, 1, 1, 0, 1, 0, 5, 1,
    14, 6, 6, 2, 6, 2, 4, 0, 4, 0, 5, 1, 5, 1, 13, 5,
    12, 13, 4, 5, 4, 5, 0, 1, 29, 61, 13, 29, 13, 29, 5, 13,
    14, 12, 6, 4, 6, 4, 4, 0, 13, 29, 5, 13, 5, 13, 13, 5,
    14, 15, 6, 7, 6, 7, 2, 3, 13, 29, 5, 13, 5, 13, 1, 5,
    270, 14, 14, 6, 14, 6, 6, 2, 12, 13, 4, 5, 4, 5, 5, 1,
    14, 15, 6, 7, 6, 7, 2, 3, 13, 29, 5, 13, 5, 13, 1, 5,
    270, 14, 14, 6, 14, 6, 6, 2, 12, 13, 4, 5, 4, 5, 5, 1,
    270, 14, 14, 6, 14, 6, 6, 2, 12, 13, 4, 5, 4, 5, 0, 1,
    782, 270, 270, 14, 270, 14, 14, 6, 14, 12, 6, 4, 6, 4, 4, 0,
};

constexpr int kQ13[] = {-1, -2, 0, 0, 0, 2, 1, 1, -1, 1, 1, 1, -1, 0, 0, -1, -1, 0, 0, 0, 1, 0, 0, -1, 1, 0, 0, 0, -1, 0, 0};
constexpr std::uint32_t kF13[] = {
    0, 1, 1, 3, 2, 3, 3, 35, 2, 3, 3, 7, 6, 7, 7, 3,
    8, 9, 0, 1, 10, 11, 2, 3, 10, 11, 2, 3, 14, 15, 6, 7,
    1, 3, 5, 7, 0, 1, 1, 3, 3, 7, 7, 23, 2, 3, 3, 7,
    0, 1, 1, 5, 2, 3, 0, 1, 2, 3, 3, 7, 6, 7, 2, 3,
    1, 9, 9, 1, 0, 1, 1, 3, 0, 1, 1, 3, 2, 3, 3, 1,
    9, 25, 1, 9, 8, 9, 0, 1, 8, 9, 0, 1, 10, 11, 2, 3,
    9, 1, 13, 5, 1, 1, 5, 1, 1, 3, 5, 7, 0, 1, 1, 3,
    1, 9, 5, 1, 0, 1, 1, 1, 0, 1, 1, 5, 2, 3, 0, 1,
    12, 4, 13, 5, 14, 6, 15, 7, 14, 6, 15, 7, 78, 14, 14, 6,
    14, 12, 12, 4, 78, 14, 14, 6, 78, 14, 14, 6, 206, 78, 78, 14,
    13, 5, 45, 37, 12, 4, 13, 5, 15, 7, 13, 5, 14, 6, 15, 7,
    12, 4, 13, 5, 14, 6, 12, 4, 14, 6, 15, 7, 78, 14, 14, 6,
    13, 5, 45, 13, 12, 4, 13, 5, 12, 4, 13, 5, 14, 6, 15, 7,
    12, 13, 13, 5, 14, 12, 12, 4, 14, 12, 12, 4, 78, 14, 14, 6,
    45, 13, 301, 45, 13, 5, 45, 13, 13, 5, 45, 13, 12, 4, 13, 5,
    13, 5, 45, 13, 12, 4, 13, 5, 12, 4, 13, 5, 14, 6, 12, 4,
};

constexpr int kQ14[] = {-1, 0, -1, 0, 0, 1, 1, 1, 0, 0, -1, 0, 1, 0, -1, 0, 0, 0, -1, -1, 1, 0, 1, 1, 1, 0, 0, -1, 0, -1, 0};
constexpr std::uint32_t kF14[] = {
    0, 1, 1, 3, 1, 5, 3, 7, 2, 3, 3, 19, 3, 7, 7, 23,
    1, 9, 3, 11, 5, 13, 7, 15, 3, 11, 11, 27, 7, 15, 15, 31,
    2, 3, 3, 11, 0, 1, 1, 3, 10, 11, 11, 27, 2, 3, 3, 19,
    3, 11, 11, 27, 1, 9, 3, 11, 11, 27, 27, 59, 3, 11, 11, 27,
    4, 5, 0, 1, 5, 13, 1, 5, 6, 7, 2, 3, 7, 5, 3, 7,
    5, 13, 1, 9, 13, 77, 5, 13, 7, 15, 3, 11, 5, 13, 7, 15,
    6, 7, 2, 3, 4, 5, 0, 1, 14, 15, 10, 11, 6, 7, 2, 3,
    7, 15, 3, 11, 5, 13, 1, 9, 15, 11, 11, 27, 7, 15, 3, 11,
    2, 0, 3, 1, 3, 1, 35, 3, 6, 2, 7, 3, 7, 3, 3, 7,
    0, 1, 1, 3, 1, 5, 3, 7, 2, 3, 3, 11, 3, 7, 7, 15,
    6, 2, 7, 3, 2, 0, 3, 1, 14, 10, 15, 11, 6, 2, 7, 3,
    2, 3, 3, 11, 0, 1, 1, 3, 10, 11, 11, 27, 2, 3, 3, 11,
    6, 4, 2, 0, 7, 5, 3, 1, 14, 6, 6, 2, 15, 7, 7, 3,
    4, 5, 0, 1, 5, 13, 1, 5, 6, 7, 2, 3, 7, 5, 3, 7,
    14, 6, 6, 2, 6, 4, 2, 0, 142, 14, 14, 10, 14, 6, 6, 2,
    6, 7, 2, 3, 4, 5, 0, 1, 14, 15, 10, 11, 6, 7, 2, 3,
};

constexpr int kQ15[] = {-1, 0, 0, -2, -1, 1, 1, 2, -1, -1, 1, 1, 1, 1, 2, 0, -1, 0, -1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0};
constexpr std::uint32_t kF15[] = {
    0, 3, 1, 35, 1, 7, 5, 3, 2, 35, 3, 99, 0, 3, 1, 35,
    2, 11, 0, 3, 3, 15, 1, 7, 10, 3, 2, 35, 2, 11, 0, 3,
    12, 15, 4, 7, 13, 143, 5, 15, 4, 7, 0, 3, 5, 15, 1, 7,
    14, 143, 6, 15, 15, 399, 7, 143, 6, 15, 2, 7, 7, 143, 3, 15,
    4, 1, 5, 3, 5, 3, 21, 1, 0, 3, 1, 35, 1, 1, 5, 3,
    0, 3, 1, 1, 1, 7, 5, 3, 2, 1, 0, 3, 0, 3, 1, 1,
    44, 13, 12, 5, 12, 15, 4, 7, 12, 5, 4, 1, 4, 7, 0, 3,
    12, 15, 4, 7, 13, 143, 5, 15, 4, 7, 0, 3, 5, 15, 1, 7,
    8, 1, 0, 3, 0, 3, 1, 1, 10, 3, 2, 35, 2, 1, 0, 3,
    10, 3, 2, 1, 2, 7, 0, 3, 26, 11, 10, 3, 10, 3, 2, 1,
    44, 13, 12, 5, 12, 15, 4, 7, 12, 5, 4, 1, 4, 7, 0, 3,
    12, 15, 4, 7, 14, 143, 6, 15, 14, 7, 6, 3, 6, 15, 2, 7,
    12, 0, 4, 1, 4, 1, 5, 0, 8, 1, 0, 3, 0, 0, 1, 1,
    8, 1, 0, 0, 0, 3, 1, 1, 10, 3, 2, 1, 2, 1, 0, 0,
    556, 12, 44, 4, 44, 13, 12, 5, 44, 4, 12, 0, 12, 5, 4, 1,
    44, 13, 12, 5, 12, 15, 4, 7, 12, 5, 4, 1, 4, 7, 0, 3,
};

constexpr int kQ16[] = {0, -1, 0, -1, 0, 1, -1, 1, 0, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 1, -1, -1, 1, 1, 1, 0, -1, 0, 0, -1, 0};
constexpr std::uint32_t kF16[] = {
    0, 1, 1, 9, 1, 3, 3, 11, 2, 3, 3, 11, 3, 19, 11, 27,
    1, 5, 5, 13, 3, 7, 7, 15, 3, 7, 7, 15, 7, 23, 15, 31,
    1, 3, 3, 1, 3, 7, 7, 3, 3, 7, 3, 3, 7, 23, 3, 19,
    3, 7, 1, 5, 7, 23, 3, 7, 7, 23, 3, 7, 23, 55, 7, 23,
    8, 9, 9, 13, 0, 1, 1, 9, 10, 11, 11, 9, 2, 3, 3, 11,
    9, 13, 13, 77, 1, 5, 5, 13, 11, 15, 15, 13, 3, 7, 7, 15,
    0, 1, 1, 5, 1, 3, 3, 1, 2, 3, 3, 1, 3, 7, 3, 3,
    1, 5, 5, 13, 3, 7, 1, 5, 3, 7, 7, 5, 7, 23, 3, 7,
    2, 0, 3, 1, 3, 1, 7, 3, 10, 2, 11, 3, 11, 3, 3, 11,
    0, 1, 1, 5, 1, 3, 3, 7, 2, 3, 3, 7, 3, 7, 7, 15,
    3, 1, 7, 3, 7, 3, 135, 7, 2, 3, 3, 3, 3, 7, 7, 3,
    1, 3, 3, 1, 3, 7, 7, 3, 3, 7, 3, 3, 7, 23, 3, 7,
    10, 8, 11, 9, 2, 0, 3, 1, 42, 10, 10, 11, 10, 2, 11, 3,
    8, 9, 9, 13, 0, 1, 1, 5, 10, 11, 11, 15, 2, 3, 3, 7,
    2, 0, 3, 1, 3, 1, 7, 3, 10, 2, 2, 3, 2, 3, 3, 3,
    0, 1, 1, 5, 1, 3, 3, 1, 2, 3, 3, 7, 3, 7, 3, 3,
};

constexpr int kQ17[] = {0, 0, -1, 0, 0, 0, 0, 0, -1, 0, -2, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1, 2, -1, 2, -1, -2, 0, -2, 0, 0, 0};
constexpr std::uint32_t kF17[] = {
    0, 3, 12, 15, 1, 19, 13, 31, 4, 7, 28, 31, 5, 23, 29, 95,
    1, 35, 13, 47, 3, 51, 15, 63, 5, 39, 29, 15, 7, 55, 13, 31,
    1, 7, 13, 79, 3, 23, 15, 95, 5, 15, 29, 95, 7, 31, 31, 223,
    3, 39, 15, 111, 7, 55, 31, 127, 7, 7, 31, 79, 15, 23, 15, 95,
    4, 7, 44, 47, 5, 23, 45, 15, 12, 15, 60, 63, 13, 7, 61, 31,
    5, 39, 45, 111, 7, 55, 13, 47, 13, 7, 61, 47, 15, 23, 29, 15,
    5, 15, 45, 111, 7, 7, 47, 79, 13, 31, 61, 127, 15, 15, 63, 95,
    7, 47, 47, 239, 15, 39, 15, 111, 15, 15, 63, 111, 271, 7, 31, 79,
    16, 19, 28, 31, 17, 51, 29, 63, 20, 23, 60, 63, 21, 55, 61, 31,
    17, 51, 29, 63, 19, 307, 31, 55, 21, 55, 28, 31, 23, 311, 29, 63,
    0, 3, 12, 15, 1, 19, 13, 31, 4, 7, 28, 31, 5, 23, 29, 95,
    1, 35, 13, 47, 3, 51, 15, 63, 5, 39, 29, 15, 7, 55, 13, 31,
    20, 23, 60, 63, 21, 55, 61, 31, 28, 31, 572, 61, 29, 23, 60, 63,
    21, 55, 61, 47, 23, 311, 29, 63, 29, 23, 60, 63, 31, 55, 61, 31,
    4, 7, 44, 47, 5, 23, 45, 15, 12, 15, 60, 63, 13, 7, 61, 31,
    5, 39, 45, 111, 7, 55, 13, 47, 13, 7, 61, 47, 15, 23, 29, 15,
};

constexpr int kQ18[] = {0, 0, 0, -1, -1, 0, -1, 1, 1, 0, 0, -1, 0, 1, 1, 1, -1, 1, 0, 0, -1, 1, 0, 1, 0, 0, -1, 0, 0, -1, 0};
constexpr std::uint32_t kF18[] = {
    0, 1, 1, 9, 2, 3, 3, 11, 2, 3, 3, 11, 10, 11, 11, 27,
    1, 5, 5, 13, 3, 7, 7, 15, 0, 1, 1, 9, 2, 3, 3, 11,
    1, 3, 3, 1, 3, 19, 3, 3, 3, 3, 35, 3, 2, 3, 3, 19,
    3, 7, 1, 5, 7, 23, 3, 7, 1, 3, 3, 1, 3, 19, 3, 3,
    2, 3, 0, 1, 6, 7, 2, 3, 6, 7, 2, 3, 14, 15, 10, 11,
    3, 7, 1, 5, 7, 23, 3, 7, 2, 3, 0, 1, 6, 7, 2, 3,
    3, 7, 1, 3, 7, 23, 3, 19, 2, 3, 3, 3, 6, 7, 2, 3,
    7, 23, 3, 7, 23, 87, 7, 23, 3, 7, 1, 3, 7, 23, 3, 19,
    4, 5, 5, 13, 6, 7, 7, 15, 6, 7, 7, 15, 14, 15, 15, 11,
    5, 13, 13, 141, 7, 15, 5, 13, 4, 5, 5, 13, 6, 7, 7, 15,
    0, 1, 1, 5, 2, 3, 3, 7, 2, 3, 3, 7, 6, 7, 7, 3,
    1, 5, 5, 13, 3, 7, 1, 5, 0, 1, 1, 5, 2, 3, 3, 7,
    6, 7, 4, 5, 14, 15, 6, 7, 14, 6, 6, 7, 46, 14, 14, 15,
    7, 15, 5, 13, 15, 7, 7, 15, 6, 7, 4, 5, 14, 15, 6, 7,
    2, 3, 0, 1, 6, 7, 2, 3, 6, 2, 2, 3, 14, 6, 6, 7,
    3, 7, 1, 5, 7, 23, 3, 7, 2, 3, 0, 1, 6, 7, 2, 3,
};

constexpr int kQ19[] = {0, 0, 0, 0, -1, 0, 0, -1, 1, -1, 0, 0, -1, 0, 1, 1, 1, 0, 1, -1, 0, 2, 1, -1, 1, -2, 0, 0, 0, -1, 0};
constexpr std::uint32_t kF19[] = {
    0, 1, 1, 17, 3, 7, 7, 23, 2, 3, 3, 19, 7, 39, 23, 55,
    2, 3, 3, 19, 7, 15, 15, 7, 6, 7, 7, 23, 15, 47, 7, 39,
    2, 3, 3, 19, 7, 23, 71, 87, 6, 7, 7, 23, 23, 55, 87, 119,
    6, 7, 7, 23, 15, 7, 79, 71, 22, 23, 23, 7, 7, 39, 71, 103,
    1, 9, 9, 25, 7, 15, 15, 31, 3, 11, 11, 27, 15, 47, 31, 63,
    3, 11, 11, 27, 15, 47, 7, 15, 7, 15, 15, 31, 47, 175, 15, 47,
    0, 1, 1, 17, 3, 7, 7, 23, 2, 3, 3, 19, 7, 39, 23, 55,
    2, 3, 3, 19, 7, 15, 15, 7, 6, 7, 7, 23, 15, 47, 7, 39,
    16, 17, 17, 25, 1, 3, 3, 19, 18, 19, 19, 27, 3, 7, 7, 23,
    18, 19, 19, 27, 3, 7, 7, 3, 22, 23, 23, 31, 7, 15, 7, 7,
    18, 19, 19, 27, 3, 7, 7, 23, 22, 23, 23, 19, 7, 23, 23, 55,
    22, 23, 23, 31, 7, 7, 15, 7, 150, 151, 22, 23, 23, 7, 7, 39,
    17, 25, 25, 281, 3, 11, 11, 27, 19, 27, 27, 25, 7, 15, 15, 31,
    19, 27, 27, 25, 7, 15, 3, 11, 23, 31, 31, 27, 15, 47, 7, 15,
    16, 17, 17, 25, 1, 3, 3, 19, 18, 19, 19, 27, 3, 7, 7, 23,
    18, 19, 19, 27, 3, 7, 7, 3, 22, 23, 23, 31, 7, 15, 7, 7,
};

constexpr int kQ20[] = {0, 0, 0, 0, 0, 0, -1, 0, -1, -1, 0, -1, 0, 0, 0, 2, -1, 2, 1, 1, 1, 1, 1, 1, -1, -1, -2, -1, 0, 0, 0};
constexpr std::uint32_t kF20[] = {
    0, 1, 2, 3, 8, 9, 10, 11, 1, 17, 3, 19, 9, 25, 11, 27,
    2, 3, 6, 7, 10, 11, 14, 15, 3, 19, 7, 23, 11, 27, 15, 31,
    8, 9, 10, 11, 24, 25, 26, 27, 9, 25, 11, 27, 25, 57, 27, 59,
    10, 11, 14, 15, 26, 27, 30, 31, 11, 27, 15, 31, 27, 59, 31, 27,
    3, 7, 7, 71, 11, 15, 15, 79, 7, 23, 23, 87, 15, 31, 31, 95,
    7, 23, 23, 87, 15, 31, 31, 95, 263, 279, 279, 343, 7, 23, 23, 87,
    11, 15, 15, 7, 27, 11, 31, 15, 15, 31, 31, 23, 11, 27, 15, 31,
    15, 31, 31, 23, 31, 15, 15, 31, 271, 287, 287, 279, 15, 31, 31, 23,
    6, 7, 14, 15, 14, 15, 142, 143, 7, 23, 15, 31, 15, 31, 14, 15,
    14, 15, 30, 31, 30, 31, 158, 159, 15, 31, 31, 15, 31, 15, 30, 31,
    14, 15, 30, 31, 30, 31, 158, 159, 15, 31, 31, 15, 31, 63, 30, 31,
    526, 14, 542, 30, 542, 30, 670, 158, 527, 15, 543, 31, 543, 31, 542, 30,
    15, 47, 47, 111, 47, 111, 175, 239, 47, 15, 15, 79, 15, 47, 47, 111,
    47, 15, 15, 79, 15, 79, 143, 207, 303, 271, 271, 335, 47, 15, 15, 79,
    47, 15, 15, 47, 15, 47, 143, 175, 303, 47, 271, 15, 47, 15, 15, 47,
    559, 47, 527, 15, 527, 15, 655, 143, 815, 303, 783, 271, 559, 47, 527, 15,
};

constexpr int kQ21[] = {-3, 0, -1, 0, 0, 2, 2, 1, 2, 1, 0, -2, -1, 1, 0, -1, -1, 0, 0, -1, -1, 1, 0, 2, 1, 0, 0, 0, 0, -2, 0};
constexpr std::uint32_t kF21[] = {
    0, 1, 3, 7, 1, 3, 19, 23, 1, 3, 7, 15, 3, 11, 3, 7,
    1, 3, 19, 3, 3, 35, 51, 19, 3, 11, 3, 11, 35, 43, 19, 3,
    12, 13, 15, 143, 4, 5, 7, 15, 13, 15, 143, 399, 5, 7, 15, 143,
    4, 5, 7, 15, 0, 1, 3, 7, 5, 7, 15, 143, 1, 3, 7, 15,
    4, 5, 7, 23, 5, 7, 23, 87, 0, 1, 3, 7, 1, 3, 7, 23,
    0, 1, 3, 19, 1, 3, 19, 83, 1, 3, 3, 3, 3, 11, 3, 19,
    28, 29, 31, 15, 12, 13, 15, 7, 12, 13, 15, 143, 4, 5, 7, 15,
    12, 13, 15, 7, 4, 5, 7, 3, 4, 5, 7, 15, 0, 1, 3, 7,
    40, 41, 0, 1, 41, 43, 1, 3, 41, 43, 1, 3, 43, 107, 3, 11,
    41, 43, 1, 3, 43, 107, 3, 35, 43, 107, 3, 11, 107, 619, 35, 43,
    60, 61, 12, 13, 44, 45, 4, 5, 61, 45, 13, 15, 45, 47, 5, 7,
    44, 45, 4, 5, 40, 41, 0, 1, 45, 47, 5, 7, 41, 43, 1, 3,
    44, 45, 4, 5, 45, 47, 5, 7, 40, 41, 0, 1, 41, 43, 1, 3,
    40, 41, 0, 1, 41, 43, 1, 3, 41, 43, 1, 3, 43, 107, 3, 11,
    1084, 60, 28, 29, 60, 44, 12, 13, 60, 61, 12, 13, 44, 45, 4, 5,
    60, 44, 12, 13, 44, 45, 4, 5, 44, 45, 4, 5, 40, 41, 0, 1,
    48, 16, 51, 19, 49, 17, 179, 51, 16, 0, 19, 3, 17, 1, 51, 19,
    49, 17, 179, 51, 51, 19, 435, 179, 17, 1, 51, 19, 19, 3, 179, 51,
    60, 28, 63, 31, 52, 20, 55, 23, 28, 12, 31, 15, 20, 4, 23, 7,
    52, 20, 55, 23, 48, 16, 51, 19, 20, 4, 23, 7, 16, 0, 19, 3,
    52, 20, 55, 23, 53, 21, 51, 19, 20, 4, 23, 7, 21, 5, 19, 3,
    48, 16, 51, 19, 49, 17, 179, 51, 16, 0, 19, 3, 17, 1, 51, 19,
    1084, 60, 61, 63, 60, 28, 63, 31, 60, 28, 29, 31, 28, 12, 31, 15,
    60, 28, 63, 31, 52, 20, 55, 23, 28, 12, 31, 15, 20, 4, 23, 7,
    60, 56, 48, 16, 61, 57, 49, 17, 56, 40, 16, 0, 57, 41, 17, 1,
    56, 57, 49, 17, 57, 59, 51, 19, 57, 41, 17, 1, 59, 43, 19, 3,
    3132, 1084, 60, 28, 1084, 60, 52, 20, 1084, 60, 28, 12, 60, 44, 20, 4,
    1084, 60, 52, 20, 60, 56, 48, 16, 60, 44, 20, 4, 56, 40, 16, 0,
    1084, 60, 52, 20, 60, 61, 53, 21, 60, 44, 20, 4, 61, 45, 21, 5,
    60, 56, 48, 16, 56, 57, 49, 17, 56, 40, 16, 0, 57, 41, 17, 1,
    7228, 3132, 1084, 60, 3132, 1084, 60, 28, 3132, 1084, 60, 28, 1084, 60, 28, 12,
    3132, 1084, 60, 28, 1084, 60, 52, 20, 1084, 60, 28, 12, 60, 44, 20, 4,
};

constexpr int kQ22[] = {-2, 0, -1, 0, 0, 1, 1, 2, 1, 0, -1, 0, 1, 0, -1, 0, 0, -1, -2, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, -2, 0};
constexpr std::uint32_t kF22[] = {
    0, 1, 1, 3, 1, 3, 3, 19, 1, 3, 3, 7, 3, 7, 19, 3,
    1, 3, 3, 7, 3, 7, 1, 3, 3, 7, 7, 15, 7, 15, 3, 7,
    16, 17, 17, 19, 17, 19, 19, 51, 0, 1, 1, 3, 1, 3, 3, 19,
    0, 1, 1, 3, 1, 3, 3, 19, 1, 3, 3, 7, 3, 7, 1, 3,
    12, 13, 13, 15, 4, 5, 5, 7, 13, 15, 15, 47, 5, 7, 7, 39,
    13, 15, 15, 47, 5, 7, 7, 15, 15, 47, 47, 111, 7, 15, 15, 47,
    28, 29, 29, 31, 20, 21, 21, 23, 12, 13, 13, 15, 4, 5, 5, 7,
    12, 13, 13, 15, 4, 5, 5, 7, 13, 15, 15, 47, 5, 7, 7, 15,
    4, 5, 0, 1, 5, 7, 1, 3, 5, 7, 1, 3, 7, 15, 3, 7,
    5, 7, 1, 3, 7, 15, 3, 7, 7, 15, 3, 7, 15, 143, 7, 15,
    20, 21, 16, 17, 21, 23, 17, 19, 4, 5, 0, 1, 5, 7, 1, 3,
    4, 5, 0, 1, 5, 7, 1, 3, 5, 7, 1, 3, 7, 15, 3, 7,
    28, 29, 12, 13, 12, 13, 4, 5, 29, 13, 13, 15, 13, 5, 5, 7,
    12, 13, 13, 15, 4, 5, 5, 7, 13, 15, 15, 47, 5, 7, 7, 15,
    284, 28, 28, 29, 28, 29, 20, 21, 28, 29, 12, 13, 12, 13, 4, 5,
    28, 29, 12, 13, 12, 13, 4, 5, 12, 13, 13, 15, 4, 5, 5, 7,
    16, 0, 17, 1, 17, 1, 19, 3, 17, 1, 19, 3, 19, 3, 83, 19,
    0, 1, 1, 3, 1, 3, 3, 1, 1, 3, 3, 7, 3, 7, 19, 3,
    20, 16, 21, 17, 21, 17, 17, 19, 16, 0, 17, 1, 17, 1, 19, 3,
    4, 0, 5, 1, 5, 1, 1, 3, 0, 1, 1, 3, 1, 3, 3, 1,
    28, 12, 29, 13, 20, 4, 21, 5, 29, 13, 31, 15, 21, 5, 23, 7,
    12, 13, 13, 15, 4, 5, 5, 7, 13, 15, 15, 47, 5, 7, 7, 15,
    284, 28, 28, 29, 28, 20, 20, 21, 28, 12, 29, 13, 20, 4, 21, 5,
    28, 12, 12, 13, 12, 4, 4, 5, 12, 13, 13, 15, 4, 5, 5, 7,
    20, 4, 16, 0, 21, 5, 17, 1, 21, 5, 17, 1, 23, 7, 19, 3,
    4, 5, 0, 1, 5, 7, 1, 3, 5, 7, 1, 3, 7, 15, 3, 7,
    28, 20, 20, 16, 29, 21, 21, 17, 20, 4, 16, 0, 21, 5, 17, 1,
    12, 4, 4, 0, 13, 5, 5, 1, 4, 5, 0, 1, 5, 7, 1, 3,
    284, 28, 28, 12, 28, 12, 20, 4, 28, 29, 29, 13, 29, 13, 21, 5,
    28, 12, 12, 13, 12, 4, 4, 5, 29, 13, 13, 15, 13, 5, 5, 7,
    796, 284, 284, 28, 284, 28, 28, 20, 284, 28, 28, 12, 28, 12, 20, 4,
    284, 28, 28, 12, 28, 12, 12, 4, 28, 12, 12, 13, 12, 4, 4, 5,
};

constexpr int kQ23[] = {-2, 0, 0, 0, 0, 1, 0, 1, 2, -1, 0, -1, -1, 0, -1, 1, -1, 0, 1, -2, 0, 2, 2, 1, 2, -1, 0, 0, 0, -3, 0};
constexpr std::uint32_t kF23[] = {
    0, 3, 1, 7, 3, 23, 7, 55, 3, 15, 7, 79, 15, 63, 79, 31,
    8, 11, 9, 15, 11, 31, 15, 63, 11, 271, 15, 335, 31, 319, 15, 287,
    8, 11, 9, 15, 11, 31, 15, 63, 11, 31, 15, 15, 1039, 1087, 1103, 1055,
    24, 27, 25, 31, 27, 63, 31, 31, 27, 287, 11, 271, 1055, 1343, 1039, 1311,
    48, 51, 49, 55, 51, 183, 55, 695, 0, 3, 1, 7, 3, 23, 7, 55,
    56, 59, 57, 63, 59, 55, 63, 183, 8, 11, 9, 15, 11, 31, 15, 63,
    56, 59, 57, 63, 59, 55, 63, 567, 8, 11, 9, 15, 11, 31, 15, 63,
    120, 123, 121, 127, 123, 51, 127, 55, 24, 27, 25, 31, 27, 63, 31, 31,
    8, 11, 9, 15, 1, 7, 3, 23, 11, 79, 15, 207, 7, 31, 15, 15,
    72, 75, 73, 79, 9, 15, 11, 31, 75, 335, 79, 463, 15, 287, 15, 271,
    24, 27, 25, 31, 9, 15, 11, 31, 27, 95, 11, 79, 15, 63, 79, 31,
    88, 91, 89, 95, 25, 31, 27, 15, 91, 351, 75, 335, 31, 319, 15, 287,
    56, 59, 57, 63, 49, 55, 51, 183, 8, 11, 9, 15, 1, 7, 3, 23,
    120, 123, 121, 127, 57, 63, 59, 55, 72, 75, 73, 79, 9, 15, 11, 31,
    120, 57, 56, 59, 57, 63, 59, 55, 24, 27, 25, 31, 9, 15, 11, 31,
    2168, 121, 120, 123, 121, 59, 123, 63, 88, 91, 89, 95, 25, 31, 27, 15,
    8, 1, 9, 3, 11, 7, 15, 23, 11, 7, 15, 15, 79, 31, 591, 15,
    24, 9, 25, 11, 27, 15, 31, 31, 27, 15, 11, 79, 95, 63, 79, 31,
    72, 9, 73, 11, 75, 15, 79, 31, 75, 15, 79, 15, 1103, 1055, 1615, 1039,
    88, 25, 89, 27, 91, 31, 95, 15, 91, 31, 75, 15, 1119, 1087, 1103, 1055,
    56, 49, 57, 51, 59, 55, 63, 183, 8, 1, 9, 3, 11, 7, 15, 23,
    120, 57, 56, 59, 57, 63, 59, 55, 24, 9, 25, 11, 27, 15, 31, 31,
    120, 57, 121, 59, 123, 63, 127, 55, 72, 9, 73, 11, 75, 15, 79, 31,
    2168, 121, 120, 123, 121, 59, 123, 63, 88, 25, 89, 27, 91, 31, 95, 15,
    24, 9, 25, 11, 9, 3, 11, 7, 27, 15, 11, 79, 15, 15, 79, 7,
    88, 73, 89, 75, 25, 11, 27, 15, 91, 79, 75, 207, 31, 31, 15, 15,
    88, 25, 89, 27, 73, 11, 75, 15, 91, 31, 75, 15, 79, 31, 591, 15,
    120, 89, 121, 91, 89, 27, 91, 11, 89, 95, 73, 79, 95, 63, 79, 31,
    120, 57, 56, 59, 57, 51, 59, 55, 24, 9, 25, 11, 9, 3, 11, 7,
    2168, 121, 120, 123, 56, 59, 57, 63, 88, 73, 89, 75, 25, 11, 27, 15,
    2168, 56, 120, 57, 121, 59, 123, 63, 88, 25, 89, 27, 73, 11, 75, 15,
    6264, 120, 2168, 121, 120, 57, 121, 59, 120, 89, 121, 91, 89, 27, 91, 11,
};

constexpr int kQ24[] = {-2, 0, 0, 0, 0, 1, 1, 1, 1, 0, -1, 0, 0, -2, 0, 0, 0, 0, -1, 1, -1, 1, 1, 1, 2, 0, -1, 0, 0, -2, 0};
constexpr std::uint32_t kF24[] = {
    0, 3, 1, 11, 1, 7, 3, 15, 1, 19, 3, 27, 3, 23, 7, 31,
    4, 7, 5, 15, 5, 39, 7, 47, 5, 23, 7, 31, 7, 55, 15, 63,
    4, 7, 5, 15, 5, 15, 7, 47, 0, 3, 1, 11, 1, 7, 3, 15,
    12, 15, 13, 47, 13, 47, 15, 111, 4, 7, 5, 15, 5, 39, 7, 47,
    8, 11, 9, 27, 0, 3, 1, 11, 9, 27, 11, 155, 1, 19, 3, 27,
    12, 15, 13, 31, 4, 7, 5, 15, 13, 31, 15, 27, 5, 23, 7, 31,
    12, 15, 13, 31, 4, 7, 5, 15, 8, 11, 9, 27, 0, 3, 1, 11,
    28, 31, 29, 15, 12, 15, 13, 47, 12, 15, 13, 31, 4, 7, 5, 15,
    4, 7, 0, 3, 5, 23, 1, 7, 5, 23, 1, 19, 7, 55, 3, 23,
    20, 23, 4, 7, 21, 55, 5, 39, 21, 55, 5, 23, 23, 119, 7, 55,
    12, 15, 4, 7, 13, 31, 5, 15, 4, 7, 0, 3, 5, 23, 1, 7,
    28, 31, 12, 15, 29, 63, 13, 47, 20, 23, 4, 7, 21, 55, 5, 39,
    12, 15, 8, 11, 4, 7, 0, 3, 13, 31, 9, 27, 5, 23, 1, 19,
    28, 31, 12, 15, 20, 23, 4, 7, 29, 23, 13, 31, 21, 55, 5, 23,
    28, 13, 12, 15, 12, 15, 4, 7, 12, 15, 8, 11, 4, 7, 0, 3,
    284, 29, 28, 31, 28, 31, 12, 15, 28, 31, 12, 15, 20, 23, 4, 7,
    4, 1, 5, 3, 5, 3, 7, 7, 5, 3, 7, 11, 7, 7, 135, 15,
    12, 5, 13, 7, 13, 7, 15, 15, 13, 7, 15, 15, 15, 23, 7, 31,
    12, 5, 13, 7, 4, 7, 5, 15, 4, 1, 5, 3, 5, 3, 7, 7,
    28, 13, 29, 15, 12, 15, 13, 47, 12, 5, 13, 7, 13, 7, 15, 15,
    12, 9, 13, 11, 4, 1, 5, 3, 13, 11, 15, 27, 5, 3, 7, 11,
    28, 13, 12, 15, 12, 5, 13, 7, 12, 15, 13, 11, 13, 7, 15, 15,
    28, 13, 12, 15, 12, 5, 13, 7, 12, 9, 13, 11, 4, 1, 5, 3,
    284, 29, 28, 31, 28, 13, 29, 15, 28, 13, 12, 15, 12, 5, 13, 7,
    12, 5, 4, 1, 13, 7, 5, 3, 13, 7, 5, 3, 15, 23, 7, 7,
    28, 21, 12, 5, 29, 23, 13, 7, 29, 23, 13, 7, 31, 55, 15, 23,
    28, 13, 12, 5, 12, 15, 4, 7, 12, 5, 4, 1, 13, 7, 5, 3,
    284, 29, 28, 13, 28, 31, 12, 15, 28, 21, 12, 5, 29, 23, 13, 7,
    28, 13, 12, 9, 12, 5, 4, 1, 12, 15, 13, 11, 13, 7, 5, 3,
    284, 29, 28, 13, 28, 21, 12, 5, 28, 31, 12, 15, 29, 23, 13, 7,
    284, 12, 28, 13, 28, 13, 12, 5, 28, 13, 12, 9, 12, 5, 4, 1,
    796, 28, 284, 29, 284, 29, 28, 13, 284, 29, 28, 13, 28, 21, 12, 5,
};

}  // namespace

const std::vector<AppendixRow>& appendix_rows() {
  static const std::vector<AppendixRow> rows = {
      {1, std::span<const int>(kQ1), std::span<const std::uint32_t>(kF1), {6, 6, 6, 6, 6}},
      {2, std::span<const int>(kQ2), std::span<const std::uint32_t>(kF2), {6, 6, 6, 6, 6}},
      {3, std::span<const int>(kQ3), std::span<const std::uint32_t>(kF3), {6, 6, 6, 6, 6}},
      {4, std::span<const int>(kQ4), std::span<const std::uint32_t>(kF4), {6, 7, 8, 8, 7}},
      {5, std::span<const int>(kQ5), std::span<const std::uint32_t>(kF5), {7, 7, 8, 8, 7}},
      {6, std::span<const int>(kQ6), std::span<const std::uint32_t>(kF6), {7, 7, 7, 7, 7}},
      {7, std::span<const int>(kQ7), std::span<const std::uint32_t>(kF7), {7, 7, 7, 7, 7}},
      {8, std::span<const int>(kQ8), std::span<const std::uint32_t>(kF8), {7, 7, 8, 8, 7}},
      {9, std::span<const int>(kQ9), std::span<const std::uint32_t>(kF9), {7, 7, 7, 7, 7}},
      {10, std::span<const int>(kQ10), std::span<const std::uint32_t>(kF10), {6, 7, 8, 8, 7}},
      {11, std::span<const int>(kQ11), std::span<const std::uint32_t>(kF11), {7, 7, 7, 7, 7}},
      {12, std::span<const int>(kQ12), std::span<const std::uint32_t>(kF12), {7, 8, 10, 10, 6}},
      {13, std::span<const int>(kQ13), std::span<const std::uint32_t>(kF13), {8, 8, 9, 9, 6}},
      {14, std::span<const int>(kQ14), std::span<const std::uint32_t>(kF14), {8, 8, 8, 8, 6}},
      {15, std::span<const int>(kQ15), std::span<const std::uint32_t>(kF15), {9, 8, 10, 10, 6}},
      {16, std::span<const int>(kQ16), std::span<const std::uint32_t>(kF16), {8, 8, 8, 8, 6}},
      {17, std::span<const int>(kQ17), std::span<const std::uint32_t>(kF17), {7, 8, 10, 10, 6}},
      {18, std::span<const int>(kQ18), std::span<const std::uint32_t>(kF18), {8, 8, 8, 8, 6}},
      {19, std::span<const int>(kQ19), std::span<const std::uint32_t>(kF19), {8, 8, 9, 9, 6}},
      {20, std::span<const int>(kQ20), std::span<const std::uint32_t>(kF20), {9, 8, 10, 10, 6}},
      {21, std::span<const int>(kQ21), std::span<const std::uint32_t>(kF21), {9, 9, 13, 13, 4}},
      {22, std::span<const int>(kQ22), std::span<const std::uint32_t>(kF22), {7, 9, 10, 10, 4}},
      {23, std::span<const int>(kQ23), std::span<const std::uint32_t>(kF23), {9, 9, 13, 13, 4}},
      {24, std::span<const int>(kQ24), std::span<const std::uint32_t>(kF24), {7, 9, 10, 10, 4}},
  };
  return rows;
}

}  // namespace hypercone::detail
