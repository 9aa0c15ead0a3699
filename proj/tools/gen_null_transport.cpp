// Regenerates include/cocal/null_transport_data.hpp on stdout.
#include <cocal/certificate.hpp>

#include <iostream>

int main() {
  using namespace cocal;
  NullTransport nt = compute_null_transport();
  std::cout << "#ifndef COCAL_NULL_TRANSPORT_DATA_HPP\n#define COCAL_NULL_TRANSPORT_DATA_HPP\n\n"
            << "// Generated by tools/gen_null_transport.cpp; do not edit.\n\n"
            << "namespace cocal::frozen {\n\n"
            << "struct RhoTerm {\n  int i, j, k;\n  const char* coeff;\n};\n\n";
  std::cout << "inline constexpr const char* kNullAlpha[7] = {";
  for (std::size_t i = 0; i < 7; ++i) std::cout << (i ? ", " : "") << '"' << nt.alpha[i].str() << '"';
  std::cout << "};\n\ninline constexpr const char* kNullBasis[7][7] = {\n";
  for (std::size_t r = 0; r < 7; ++r) {
    std::cout << "    {";
    for (std::size_t c = 0; c < 7; ++c) std::cout << (c ? ", " : "") << '"' << nt.h(r, c).str() << '"';
    std::cout << "},\n";
  }
  std::cout << "};\n\ninline constexpr RhoTerm kNullRho[" << nt.rho.terms().size() << "] = {\n";
  for (const auto& [m, c] : nt.rho.terms()) {
    auto idx = indices_of(m);
    std::cout << "    {" << idx[0] << ", " << idx[1] << ", " << idx[2] << ", \"" << c.str() << "\"},\n";
  }
  std::cout << "};\n\n}  // namespace cocal::frozen\n\n#endif  // COCAL_NULL_TRANSPORT_DATA_HPP\n";
}
