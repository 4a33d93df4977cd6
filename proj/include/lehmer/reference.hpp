#pragma once

// Published reference values the verification suites compare against.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace lehmer::reference {

// |W_{3n}| for n = 0 .. 10.
inline constexpr std::array<std::string_view, 11> kAbsW{
    "1",
    "1",
    "19",
    "1513",
    "315523",
    "136085041",
    "105261234643",
    "132705221399353",
    "254604707462013571",
    "705927677520644167681",
    "2716778010767155313771539",
};

// Periods of W_{3n} mod 3^k after the pre-period [1].
inline constexpr std::array<std::uint64_t, 2> kCycle2{8, 1};
inline constexpr std::array<std::uint64_t, 6> kCycle3{26, 19, 26, 1, 8, 1};
inline constexpr std::array<std::uint64_t, 18> kCycle4{80, 19, 26, 28, 62, 28, 26, 19, 80,
                                                       1,  62, 55, 53, 19, 53, 55, 62, 1};
inline constexpr std::array<std::uint64_t, 54> kCycle5{
    242, 19,  188, 109, 62,  28,  107, 19,  80,  82,  224, 217, 53,  181,
    53,  217, 224, 82,  80,  19,  107, 28,  62,  109, 188, 19,  242, 1,
    224, 55,  134, 181, 215, 136, 224, 163, 161, 19,  26,  190, 62,  190,
    26,  19,  161, 163, 224, 136, 215, 181, 134, 55,  224, 1};

// Empty span for k outside 2..5.
inline std::span<const std::uint64_t> cycle(unsigned k) {
  switch (k) {
    case 2: return kCycle2;
    case 3: return kCycle3;
    case 4: return kCycle4;
    case 5: return kCycle5;
    default: return {};
  }
}

// Delta(x, k) for k = 1, 2, 3, ascending coefficients.
inline constexpr std::array<long, 3> kDelta1{1, 3, 1};
inline constexpr std::array<long, 5> kDelta2{5, 20, 25, 10, 1};
inline constexpr std::array<long, 7> kDelta3{61, 287, 490, 385, 140, 21, 1};

}  // namespace lehmer::reference
