#ifndef COCAL_NULL_TRANSPORT_DATA_HPP
#define COCAL_NULL_TRANSPORT_DATA_HPP

// Generated by tools/gen_null_transport.cpp; do not edit.

namespace cocal::frozen {

struct RhoTerm {
  int i, j, k;
  const char* coeff;
};

inline constexpr const char* kNullAlpha[7] = {"1/1", "0/1", "0/1", "0/1", "1/1", "0/1", "0/1"};

inline constexpr const char* kNullBasis[7][7] = {
    {"0/1", "1/1", "0/1", "0/1", "0/1", "1/1", "0/1"},
    {"0/1", "0/1", "0/1", "1/1", "0/1", "0/1", "-1/1"},
    {"-1/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1"},
    {"0/1", "0/1", "1/1", "0/1", "0/1", "0/1", "0/1"},
    {"0/1", "0/1", "0/1", "0/1", "0/1", "1/1", "0/1"},
    {"0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-1/1"},
    {"1/1", "0/1", "0/1", "0/1", "1/1", "0/1", "0/1"},
};

inline constexpr RhoTerm kNullRho[5] = {
    {1, 3, 5, "1/1"},
    {2, 4, 5, "-1/1"},
    {2, 3, 6, "1/1"},
    {1, 4, 6, "1/1"},
    {4, 5, 6, "2/1"},
};

}  // namespace cocal::frozen

#endif  // COCAL_NULL_TRANSPORT_DATA_HPP
