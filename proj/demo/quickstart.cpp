// Tour of the library: products, grading, compactness, the coproduct,
// functionals and circle measures.

#include <toeplitz/toeplitz.hpp>

#include <iostream>

using namespace toeplitz;

int main() {
    auto a = expr::parse_element("T*T");
    auto p0 = expr::parse_element("I - T T*");
    std::cout << "T* T         = " << to_string(a) << '\n';
    std::cout << "I - T T*     = " << to_string(p0) << "  (compact: " << std::boolalpha << is_compact(p0) << ")\n";

    auto x = expr::parse_element("T(2,1) + 3/2 T(0,3) - i T(1,1)");
    for (const auto& [k, part] : graded_components(x)) std::cout << "index " << k << ": " << to_string(part) << '\n';
    std::cout << "symbol       = " << to_string(symbol(x)) << '\n';

    std::cout << "Delta(T + T*) = " << to_string(delta(expr::parse_element("T + T*"))) << '\n';
    std::cout << "weak Hopf axioms on x: " << weak_hopf_check(x) << '\n';

    auto diag = expr::parse_element("I - 2 T(1,1) + 3/4 T(2,2)");
    std::cout << "||" << to_string(diag) << "|| = " << norm_T0(diag).value << " (truncated estimate "
              << op_norm(truncate(diag, 16)) << ")\n";

    auto rho = cesaro_iterate(diagonal_state(make_rational(1, 2)), 4, 4);
    std::cout << "rho_4(T(1,1)) = " << to_string(rho.at({1, 1})) << '\n';

    auto mu = parse_measure("dirac(1/4) + density{0: 1, 1: 1/2}");
    auto nu = parse_measure("dirac(1/2)");
    std::cout << "mu * nu = " << to_string(convolve_measures(mu, nu)) << '\n';
}
