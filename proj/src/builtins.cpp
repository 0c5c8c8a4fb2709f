#include "frattini/builtins.hpp"

#include <algorithm>
#include <cctype>

#include "frattini/errors.hpp"
#include "frattini/numeric.hpp"

namespace frattini {

namespace {

// Arithmetic tables for GF(q), q = p^k <= 9.  Elements are indexed by
// their coefficient vectors in base p; prime fields are plain residues.
struct Field {
  unsigned q = 0, p = 0, k = 1;
  std::vector<unsigned> mul_table;  // q*q
  std::vector<unsigned> add_table;  // q*q
  unsigned primitive = 0;

  unsigned add(unsigned a, unsigned b) const { return add_table[a * q + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_table[a * q + b]; }
  unsigned neg(unsigned a) const {
    for (unsigned b = 0; b < q; ++b)
      if (add(a, b) == 0) return b;
    return 0;
  }
  unsigned inv(unsigned a) const {
    for (unsigned b = 0; b < q; ++b)
      if (mul(a, b) == 1) return b;
    throw DomainError("field inverse of zero");
  }
  unsigned pow(unsigned a, unsigned n) const {
    unsigned r = 1;
    for (unsigned i = 0; i < n; ++i) r = mul(r, a);
    return r;
  }
};

Field make_field(unsigned q) {
  Field f;
  f.q = q;
  auto primes = prime_factors(q);
  if (primes.size() != 1) throw ValidationError("field size must be a prime power");
  f.p = static_cast<unsigned>(primes.front());
  f.k = exact_log(q, f.p);

  // Reduction of x^k for the fixed modulus, as coefficient vectors.
  std::vector<unsigned> red(f.k, 0);
  if (f.k > 1) {
    if (q == 4 || q == 8) {
      red[0] = 1;  // x^2 = x + 1 over GF(2); x^3 = x + 1 over GF(2)
      red[1] = 1;
    } else if (q == 9) {
      red[0] = 2;  // x^2 = -1 over GF(3)
    } else {
      throw ValidationError("unsupported field size " + std::to_string(q));
    }
  }

  auto coeffs = [&](unsigned e) {
    std::vector<unsigned> c(f.k);
    for (unsigned i = 0; i < f.k; ++i) {
      c[i] = e % f.p;
      e /= f.p;
    }
    return c;
  };
  auto index = [&](const std::vector<unsigned>& c) {
    unsigned e = 0;
    for (unsigned i = f.k; i-- > 0;) e = e * f.p + c[i];
    return e;
  };

  f.add_table.resize(static_cast<std::size_t>(q) * q);
  f.mul_table.resize(static_cast<std::size_t>(q) * q);
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      auto ca = coeffs(a), cb = coeffs(b);
      std::vector<unsigned> s(f.k);
      for (unsigned i = 0; i < f.k; ++i) s[i] = (ca[i] + cb[i]) % f.p;
      f.add_table[a * q + b] = index(s);

      // Schoolbook product, reduced degree-by-degree via x^k = red.
      std::vector<unsigned> prod(2 * f.k - 1, 0);
      for (unsigned i = 0; i < f.k; ++i)
        for (unsigned j = 0; j < f.k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % f.p;
      for (unsigned d = 2 * f.k - 2; d >= f.k && d < prod.size(); --d) {
        unsigned c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < f.k; ++i)
          prod[d - f.k + i] = (prod[d - f.k + i] + c * red[i]) % f.p;
      }
      std::vector<unsigned> m(prod.begin(), prod.begin() + f.k);
      f.mul_table[a * q + b] = index(m);
    }
  }

  for (unsigned g = 1; g < q; ++g) {
    unsigned x = g, count = 1;
    while (x != 1) {
      x = f.mul(x, g);
      ++count;
    }
    if (count == q - 1) {
      f.primitive = g;
      break;
    }
  }
  return f;
}

struct Mat {
  unsigned a, b, c, d;
};

// Projective line with q+1 points: index x in [0,q) is [x:1], index q
// is [1:0].  Matrices act on row vectors.
Perm projective_perm(const Field& f, const Mat& m) {
  const unsigned q = f.q;
  std::vector<Point> img(q + 1);
  auto map_vec = [&](unsigned u, unsigned v) -> Point {
    if (v != 0) return static_cast<Point>(f.mul(u, f.inv(v)));
    return static_cast<Point>(q);
  };
  for (unsigned x = 0; x < q; ++x)
    img[x] = map_vec(f.add(f.mul(x, m.a), m.c), f.add(f.mul(x, m.b), m.d));
  img[q] = map_vec(m.a, m.b);
  return Perm(std::move(img));
}

// Generators of SL(2,q) as projective permutations: the root subgroup
// basis [[1, mu^i],[0,1]] and the Weyl element [[0,1],[-1,0]].
std::vector<Perm> sl2_gens(const Field& f) {
  std::vector<Perm> gens;
  for (unsigned i = 0; i < f.k; ++i)
    gens.push_back(projective_perm(f, {1, f.pow(f.primitive, i), 0, 1}));
  gens.push_back(projective_perm(f, {0, 1, f.neg(1), 0}));
  return gens;
}

// Action of a matrix on the 8 non-zero vectors of GF(3)^2; vector (a,b)
// has index 3a + b - 1 after skipping the origin.
Perm gl23_perm(const Mat& m) {
  std::vector<Point> img(8);
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      unsigned u = (a * m.a + b * m.c) % 3;
      unsigned v = (a * m.b + b * m.d) % 3;
      img[3 * a + b - 1] = static_cast<Point>(3 * u + v - 1);
    }
  return Perm(std::move(img));
}

}  // namespace

Group builtin_cyclic(unsigned n) {
  if (n == 0) throw ValidationError("cyclic: order must be positive");
  if (n == 1) return Group::trivial(1, "cyclic(1)");
  std::vector<Point> pts(n);
  for (unsigned i = 0; i < n; ++i) pts[i] = static_cast<Point>(i);
  return Group(n, {Perm::cycle(n, pts)}, "cyclic(" + std::to_string(n) + ")");
}

Group builtin_dihedral(unsigned n) {
  if (n < 3) throw ValidationError("dihedral: need at least 3 vertices");
  std::vector<Point> pts(n);
  for (unsigned i = 0; i < n; ++i) pts[i] = static_cast<Point>(i);
  Perm rot = Perm::cycle(n, pts);
  std::vector<Point> refl(n);
  for (unsigned i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return Group(n, {rot, Perm(std::move(refl))}, "dihedral(" + std::to_string(n) + ")");
}

Group builtin_sym(unsigned n) {
  std::string name = "sym(" + std::to_string(n) + ")";
  if (n == 0) throw ValidationError("sym: degree must be positive");
  if (n == 1) return Group::trivial(1, name);
  std::vector<Perm> gens{Perm::cycle(n, {0, 1})};
  if (n > 2) {
    std::vector<Point> pts(n);
    for (unsigned i = 0; i < n; ++i) pts[i] = static_cast<Point>(i);
    gens.push_back(Perm::cycle(n, pts));
  }
  return Group(n, std::move(gens), name);
}

Group builtin_alt(unsigned n) {
  std::string name = "alt(" + std::to_string(n) + ")";
  if (n < 3) throw ValidationError("alt: degree must be at least 3");
  std::vector<Perm> gens{Perm::cycle(n, {0, 1, 2})};
  if (n > 3) {
    std::vector<Point> pts;
    for (unsigned i = (n % 2 == 0) ? 1 : 0; i < n; ++i) pts.push_back(static_cast<Point>(i));
    gens.push_back(Perm::cycle(n, pts));
  }
  return Group(n, std::move(gens), name);
}

Group builtin_elem_abelian(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw ValidationError("elem_abelian: p must be prime");
  if (k == 0) throw ValidationError("elem_abelian: rank must be positive");
  std::size_t degree = static_cast<std::size_t>(p) * k;
  std::vector<Perm> gens;
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Point> pts;
    for (unsigned j = 0; j < p; ++j) pts.push_back(static_cast<Point>(i * p + j));
    gens.push_back(Perm::cycle(degree, pts));
  }
  return Group(degree, std::move(gens),
               "elem_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

Group builtin_q8() {
  // Regular action on the eight units {1,-1,i,-i,j,-j,k,-k}.
  Perm i(std::vector<Point>{2, 3, 1, 0, 6, 7, 5, 4});
  Perm j(std::vector<Point>{4, 5, 7, 6, 1, 0, 2, 3});
  return Group(8, {i, j}, "q8");
}

Group builtin_sl23() {
  std::vector<Perm> gens;
  gens.push_back(gl23_perm({1, 1, 0, 1}));
  gens.push_back(gl23_perm({0, 1, 2, 0}));  // [[0,1],[-1,0]] over GF(3)
  return Group(8, std::move(gens), "sl23");
}

Group builtin_gl2_3() {
  std::vector<Perm> gens;
  gens.push_back(gl23_perm({1, 1, 0, 1}));
  gens.push_back(gl23_perm({0, 1, 2, 0}));
  gens.push_back(gl23_perm({2, 0, 0, 1}));  // determinant representative
  return Group(8, std::move(gens), "gl2_3");
}

Group builtin_sl2(unsigned q) {
  if (q != 4 && q != 5 && q != 7 && q != 8 && q != 9)
    throw ValidationError("sl2: q must be one of 4, 5, 7, 8, 9");
  Field f = make_field(q);
  return Group(q + 1, sl2_gens(f), "sl2(" + std::to_string(q) + ")");
}

Group builtin_paper_example(std::uint64_t p, unsigned e) {
  if (p != 2 || e != 1)
    throw ValidationError(
        "paper_example: supported parameters require p^(p^e) <= 9 with a faithful "
        "projective action; use (2,1)");
  const unsigned q = 4;  // p^(p^e)
  Field f = make_field(q);
  auto gens = sl2_gens(f);
  // Frobenius x -> x^p on the projective line.
  std::vector<Point> img(q + 1);
  for (unsigned x = 0; x < q; ++x) img[x] = static_cast<Point>(f.mul(x, x));
  img[q] = static_cast<Point>(q);
  gens.push_back(Perm(std::move(img)));
  return Group(q + 1, std::move(gens),
               "paper_example(" + std::to_string(p) + "," + std::to_string(e) + ")");
}

Group direct_product(const Group& a, const Group& b) {
  std::size_t degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < a.degree(); ++i) img[i] = g(static_cast<Point>(i));
    for (std::size_t i = a.degree(); i < degree; ++i) img[i] = static_cast<Point>(i);
    gens.push_back(Perm(std::move(img)));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < a.degree(); ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < b.degree(); ++i)
      img[a.degree() + i] = static_cast<Point>(a.degree() + g(static_cast<Point>(i)));
    gens.push_back(Perm(std::move(img)));
  }
  return Group(degree, std::move(gens), "direct_product(" + a.name() + "," + b.name() + ")");
}

Group builtin_swap_product(const Group& g) {
  const std::size_t d = g.degree();
  Group square = direct_product(g, g);
  std::vector<Perm> gens = square.generators();
  std::vector<Point> swap(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    swap[i] = static_cast<Point>(i + d);
    swap[i + d] = static_cast<Point>(i);
  }
  gens.push_back(Perm(std::move(swap)));
  return Group(2 * d, std::move(gens), "swap_product(" + g.name() + ")");
}

namespace {

struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit SpecParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    if (!peek(c))
      throw ValidationError("group spec: expected '" + std::string(1, c) + "' at position " +
                            std::to_string(pos) + " in '" + s + "'");
    ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos)
      throw ValidationError("group spec: expected a name at position " + std::to_string(pos) +
                            " in '" + s + "'");
    return s.substr(start, pos - start);
  }

  std::uint64_t number(const std::string& tok) {
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ValidationError("group spec: expected a number, got '" + tok + "'");
    return std::stoull(tok);
  }

  Group parse() {
    Group g = parse_spec();
    skip_ws();
    if (pos != s.size())
      throw ValidationError("group spec: trailing characters at position " +
                            std::to_string(pos) + " in '" + s + "'");
    return g;
  }

  Group parse_spec() {
    std::string name = ident();
    std::vector<std::string> nums;
    std::vector<Group> groups;
    if (peek('(')) {
      ++pos;
      while (true) {
        skip_ws();
        std::size_t mark = pos;
        std::string tok = ident();
        if (peek('(')) {
          pos = mark;
          groups.push_back(parse_spec());
        } else {
          nums.push_back(tok);
        }
        if (peek(',')) {
          ++pos;
          continue;
        }
        expect(')');
        break;
      }
    }
    return build(name, nums, groups);
  }

  Group build(const std::string& name, const std::vector<std::string>& nums,
              const std::vector<Group>& groups) {
    auto want = [&](std::size_t n_nums, std::size_t n_groups) {
      if (nums.size() != n_nums || groups.size() != n_groups)
        throw ValidationError("group spec: wrong arguments for '" + name + "'");
    };
    if (name == "cyclic") {
      want(1, 0);
      return builtin_cyclic(static_cast<unsigned>(number(nums[0])));
    }
    if (name == "dihedral") {
      want(1, 0);
      return builtin_dihedral(static_cast<unsigned>(number(nums[0])));
    }
    if (name == "sym") {
      want(1, 0);
      return builtin_sym(static_cast<unsigned>(number(nums[0])));
    }
    if (name == "alt") {
      want(1, 0);
      return builtin_alt(static_cast<unsigned>(number(nums[0])));
    }
    if (name == "elem_abelian") {
      want(2, 0);
      return builtin_elem_abelian(number(nums[0]), static_cast<unsigned>(number(nums[1])));
    }
    if (name == "q8") {
      want(0, 0);
      return builtin_q8();
    }
    if (name == "sl23") {
      want(0, 0);
      return builtin_sl23();
    }
    if (name == "gl2_3") {
      want(0, 0);
      return builtin_gl2_3();
    }
    if (name == "sl2") {
      want(1, 0);
      return builtin_sl2(static_cast<unsigned>(number(nums[0])));
    }
    if (name == "paper_example") {
      want(2, 0);
      return builtin_paper_example(number(nums[0]), static_cast<unsigned>(number(nums[1])));
    }
    if (name == "direct_product") {
      if (groups.size() < 2 || !nums.empty())
        throw ValidationError("group spec: direct_product takes at least two group arguments");
      Group g = groups[0];
      for (std::size_t i = 1; i < groups.size(); ++i) g = direct_product(g, groups[i]);
      return g;
    }
    if (name == "swap_product") {
      want(0, 1);
      return builtin_swap_product(groups[0]);
    }
    throw ValidationError("group spec: unknown constructor '" + name + "'");
  }
};

}  // namespace

Group builtin_group(const std::string& spec) { return SpecParser(spec).parse(); }

std::vector<std::string> builtin_registry() {
  return {"cyclic(n)",   "dihedral(n)",        "sym(n)",
          "alt(n)",      "elem_abelian(p,k)",  "q8",
          "sl23",        "gl2_3",              "sl2(q) for q in {4,5,7,8,9}",
          "direct_product(spec,spec,...)",     "swap_product(spec)",
          "paper_example(2,1)"};
}

}  // namespace frattini
