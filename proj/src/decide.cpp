// SPDX-License-Identifier: Apache-2.0
#include "qts/decide.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qts {

namespace {

Int product(const std::vector<Int>& v) {
  Int r = 1;
  for (const auto& x : v) r *= x;
  return r;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool all_plus(const std::vector<SymbolCertificate>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.value == 1; });
}

std::vector<SymbolCertificate> at_prime(const std::vector<SymbolCertificate>& cs, const Int& p) {
  std::vector<SymbolCertificate> out;
  for (const auto& c : cs)
    if (c.place.kind == Place::Kind::Finite && c.place.p == p) out.push_back(c);
  return out;
}

void finish(Decision& d) {
  for (const auto& c : d.clauses)
    if (!c.holds) d.failed_conditions.push_back(c.id);
  bool clauses_ok = d.failed_conditions.empty();
  bool certs_ok = all_plus(d.certificates);
  if (clauses_ok != certs_ok) throw std::logic_error("clause verdict disagrees with the local symbols");
  d.verdict = certs_ok;
}

}  // namespace

Int Preprocessing::P_product() const { return product(P); }
Int Preprocessing::Q_product() const { return product(Q); }

Preprocessing normalize(const QuartElement& M) {
  if (M.is_zero()) throw std::invalid_argument("cannot normalize zero");
  Int g = 0, L = 1;
  for (const auto& c : M.coords()) {
    Int n = abs(c.get_num()), d = c.get_den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), d.get_mpz_t());
  }
  // content r = g / L > 0, M = r * m
  Preprocessing out;
  Rat r(g, L);
  r.canonicalize();
  out.m = M.scaled(Rat(1) / r);
  Int num = r.get_num(), den = r.get_den();
  auto [s, f] = squarefree_decompose(num * den);
  out.lambda = Rat(s, den);
  out.lambda.canonicalize();
  for (const auto& pp : factorize(f).factors)
    (mod(pp.prime, 4) == 3 ? out.P : out.Q).push_back(pp.prime);
  return out;
}

Decision is_sum_of_two_squares(const FieldParams& params, const QuartElement& M) {
  Decision d;
  d.preprocessing = normalize(M);
  const Preprocessing& pre = *d.preprocessing;
  const QuartElement& m = pre.m;
  d.certificates = all_symbols(params, M);
  const int alpha = static_cast<int>(pre.P.size());
  auto in_P = [&](const Int& p) { return std::find(pre.P.begin(), pre.P.end(), p) != pre.P.end(); };

  // (1) real places
  {
    Clause c{"positivity", true, "real-sign", {}};
    if (params.A > 0) {
      auto signs = embedding_signs(params, m);
      c.holds = signs && std::all_of(signs->begin(), signs->end(), [](int s) { return s > 0; });
      c.data = {{"totally_positive", yes_no(c.holds)}};
    } else {
      c.rule = "complex-place";
      c.data = {{"reason", "A < 0: no real places"}};
    }
    d.clauses.push_back(c);
  }

  // (2) primes = 3 mod 4 dividing N(m): the case rule, with target (-1, P) at each place
  Int norm = norm_K_over_Q(m).get_num();
  std::vector<Int> odd_primes;
  for (const auto& pp : factorize(norm).factors)
    if (pp.prime != 2 && mod(pp.prime, 4) == 3) odd_primes.push_back(pp.prime);
  for (const Int& p : odd_primes) {
    SplittingType t = classify(params, p);
    bool twisted = t.tag == SplitTag::SS && in_P(p);
    RulePrediction r = predict(params, m, p);
    auto exact_m = place_symbols(params, m, p);
    auto exact_M = at_prime(d.certificates, p);
    Clause c{"odd-place:" + p.get_str(), all_plus(exact_M), r.rule, r.data};
    c.data.insert(c.data.begin(), {"type", to_string(t.tag)});
    if (twisted) {
      // every place needs (-1, m) = -1, i.e. all four valuations odd
      c.data.push_back({"twist", "(-1,P) = -1 at all four places"});
    } else if (r.applicable && r.all_plus) {
      if (*r.all_plus != all_plus(exact_m)) throw std::logic_error("case rule disagrees at " + p.get_str());
    }
    d.clauses.push_back(c);
  }

  // (3) dyadic places
  {
    SplittingType t = classify_dyadic(params);
    RulePrediction r = predict_dyadic(params, m);
    auto exact_M = at_prime(d.certificates, 2);
    int twist = (t.tag == SplitTag::SS && !t.single_dyadic_spot && alpha % 2) ? -1 : 1;
    Clause c{"dyadic", all_plus(exact_M), r.rule, r.data};
    c.data.insert(c.data.begin(), {"type", to_string(t.tag)});
    c.data.push_back({"alpha", std::to_string(alpha)});
    c.data.push_back({"twist", std::to_string(twist)});
    if (r.applicable && r.per_place.size() == exact_M.size())
      for (size_t j = 0; j < exact_M.size(); ++j)
        if (r.per_place[j] && *r.per_place[j] * twist != exact_M[j].value)
          throw std::logic_error("dyadic case rule disagrees at " + exact_M[j].place.label);
    d.clauses.push_back(c);
  }

  // (4) primes of P not dividing N(m): (-1, P) = -1 exactly at SS(p) places
  for (const Int& p : pre.P) {
    if (mod(norm, p) == 0) continue;
    SplittingType t = classify(params, p);
    Clause c{"rational-factor:" + p.get_str(), t.tag != SplitTag::SS, "rational-factor", {}};
    c.data = {{"type", to_string(t.tag)},
              {"not_split_completely", yes_no(c.holds)},
              {"p_divides_A", yes_no(mod(params.A, p) == 0)}};
    if (c.holds != all_plus(at_prime(d.certificates, p)))
      throw std::logic_error("rational factor rule disagrees at " + p.get_str());
    d.clauses.push_back(c);
  }

  finish(d);
  return d;
}

Decision prime_is_sum_of_two_squares(const FieldParams& params, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + p.get_str());
  Decision d;
  QuartElement M = element(params, p, 0, 0, 0);
  d.preprocessing = normalize(M);
  d.certificates = all_symbols(params, M);
  if (mod(p, 4) != 3) {
    d.clauses.push_back({"rational-sum", true, "rational-sum", {{"reason", "p is a sum of two squares in Q"}}});
  } else {
    SplittingType t2 = classify_dyadic(params), tp = classify_odd(params, p);
    bool ss2 = t2.tag == SplitTag::SS && !t2.single_dyadic_spot;
    d.clauses.push_back({"dyadic", !ss2, "rational-factor", {{"type", to_string(t2.tag)}}});
    d.clauses.push_back(
        {"rational-factor:" + p.get_str(), tp.tag != SplitTag::SS, "rational-factor", {{"type", to_string(tp.tag)}}});
  }
  finish(d);
  return d;
}

Decision minus_one_is_sum_of_two_squares(const FieldParams& params) {
  Decision d;
  QuartElement M = element(params, -1, 0, 0, 0);
  d.preprocessing = normalize(M);
  d.certificates = all_symbols(params, M);
  SplittingType t2 = classify_dyadic(params);
  bool ss2 = t2.tag == SplitTag::SS && !t2.single_dyadic_spot;
  d.clauses.push_back({"positivity", params.A < 0, params.A < 0 ? "complex-place" : "real-sign",
                       {{"A", params.A.get_str()}}});
  d.clauses.push_back({"dyadic", !ss2, "dyadic-split", {{"type", to_string(t2.tag)}}});
  finish(d);
  return d;
}

}  // namespace qts
