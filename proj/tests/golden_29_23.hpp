#pragma once

// Golden fixture: the 308 numbers not representable as 29x+23y,
// regenerated with an independent additive sieve.

#include <array>
#include <cstdint>

namespace golden {

inline constexpr std::array<std::int64_t, 308> kGaps2923 = {
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14,
    15, 16, 17, 18, 19, 20, 21, 22, 24, 25, 26, 27, 28, 30,
    31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44,
    45, 47, 48, 49, 50, 51, 53, 54, 55, 56, 57, 59, 60, 61,
    62, 63, 64, 65, 66, 67, 68, 70, 71, 72, 73, 74, 76, 77,
    78, 79, 80, 82, 83, 84, 85, 86, 88, 89, 90, 91, 93, 94,
    95, 96, 97, 99, 100, 101, 102, 103, 105, 106, 107, 108, 109, 111,
    112, 113, 114, 117, 118, 119, 120, 122, 123, 124, 125, 126, 128, 129,
    130, 131, 132, 134, 135, 136, 137, 140, 141, 142, 143, 146, 147, 148,
    149, 151, 152, 153, 154, 155, 157, 158, 159, 160, 163, 164, 165, 166,
    169, 170, 171, 172, 175, 176, 177, 178, 180, 181, 182, 183, 186, 187,
    188, 189, 192, 193, 194, 195, 198, 199, 200, 201, 204, 205, 206, 209,
    210, 211, 212, 215, 216, 217, 218, 221, 222, 223, 224, 227, 228, 229,
    233, 234, 235, 238, 239, 240, 241, 244, 245, 246, 247, 250, 251, 252,
    256, 257, 258, 262, 263, 264, 267, 268, 269, 270, 273, 274, 275, 279,
    280, 281, 285, 286, 287, 291, 292, 293, 296, 297, 298, 302, 303, 304,
    308, 309, 310, 314, 315, 316, 320, 321, 325, 326, 327, 331, 332, 333,
    337, 338, 339, 343, 344, 349, 350, 354, 355, 356, 360, 361, 362, 366,
    367, 372, 373, 378, 379, 383, 384, 385, 389, 390, 395, 396, 401, 402,
    407, 408, 412, 413, 418, 419, 424, 425, 430, 431, 436, 441, 442, 447,
    448, 453, 454, 459, 465, 470, 471, 476, 477, 482, 488, 494, 499, 500,
    505, 511, 517, 523, 528, 534, 540, 546, 557, 563, 569, 586, 592, 615
};

}  // namespace golden
