// Prints the Eulerian polynomials and the u, v, alpha~ rows for a = 1/(1-x-x^2).

#include <iostream>

#include "riordan_gep/riordan_gep.hpp"

int main() {
  using namespace rgep;
  for (int n = 1; n <= 6; ++n) std::cout << "A_" << n << " = " << to_string(euler_poly(n)) << "\n";

  const int n = 5;
  const GepContext ctx(eval_expr("1/(1-x-x^2)", GepContext::required_order(n)), n);
  std::cout << "u_5      = " << to_string(ctx.u()) << "\n"
            << "v_5      = " << to_string(ctx.v()) << "\n"
            << "alpha~_5 = " << to_string(ctx.alpha_tilde()) << "\n";
  std::cout << render(doc_matrix(w_matrix(3, 2).matrix), OutputFormat::Pretty);
}
