#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frattini/group.hpp"

namespace frattini {

Group builtin_cyclic(unsigned n);
Group builtin_dihedral(unsigned n);  // order 2n, natural action on n points
Group builtin_sym(unsigned n);
Group builtin_alt(unsigned n);
Group builtin_elem_abelian(std::uint64_t p, unsigned k);  // k disjoint p-cycles
Group builtin_q8();                                       // regular action on 8 points
Group builtin_sl23();                                     // on the 8 non-zero vectors
Group builtin_gl2_3();                                    // on the 8 non-zero vectors
Group builtin_sl2(unsigned q);  // projective-line action, q in {4,5,7,8,9}
Group builtin_swap_product(const Group& g);  // (G x G) : C2 on disjoint copies
Group builtin_paper_example(std::uint64_t p, unsigned e);  // SL(2,p^(p^e)) with Frobenius
Group direct_product(const Group& a, const Group& b);

// Parse a constructor expression such as "sym(4)", "q8",
// "direct_product(alt(5),alt(5))" or "swap_product(alt(5))".
Group builtin_group(const std::string& spec);

// The documented registry (for help text and validation messages).
std::vector<std::string> builtin_registry();

}  // namespace frattini
