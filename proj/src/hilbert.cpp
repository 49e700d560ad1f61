#include "bqs/hilbert.hpp"

#include "bqs/errors.hpp"
#include "bqs/oracle.hpp"
#include "bqs/paths.hpp"

namespace bqs {

namespace {

Integer exact_quotient(const Integer& num, const Integer& den, const char* what) {
  Integer q;
  Integer r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw Error(std::string("internal: inexact division in ") + what);
  return q;
}

}  // namespace

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer fuss_catalan(int n, int p) {
  if (n < 0 || p < 1) throw DimensionError("fuss_catalan needs n >= 0 and p >= 1");
  const auto nn = static_cast<unsigned long>(n);
  const auto pp = static_cast<unsigned long>(p);
  return exact_quotient(binomial((pp + 1) * nn, nn), Integer(pp * nn + 1), "fuss_catalan");
}

Integer quotient_dim_formula(int n, int p) {
  if (n < 1 || p < 1) throw DimensionError("quotient_dim_formula needs n >= 1 and p >= 1");
  return fuss_catalan(n, p);
}

Integer bigraded_dim(int n, int k, int l) {
  if (n < 1 || k < 0 || l < 0) throw DimensionError("bigraded_dim needs n >= 1 and k, l >= 0");
  if (k + l >= n) return 0;
  const auto nn = static_cast<unsigned long>(n);
  const auto kk = static_cast<unsigned long>(k);
  const auto ll = static_cast<unsigned long>(l);
  const Integer num = binomial(nn + kk - 1, kk) * binomial(nn + ll - 1, ll) * (n - k - l);
  return exact_quotient(num, Integer(n), "bigraded_dim");
}

HilbertTable hilbert_by_enumeration(int n, int p) {
  HilbertTable table{n, p, {}, 0};
  for (const auto& v : enumerate_p_dyck(n, p)) {
    ++table.entries[weight(v)];
    ++table.total;
  }
  return table;
}

HilbertTable hilbert_by_oracle(int n, int p) {
  HilbertTable table{n, p, {}, 0};
  for (const auto& [degree, dim] : oracle_quotient_dim(n, p, n)) {
    if (dim == 0) continue;
    table.entries[degree] = dim;
    table.total += dim;
  }
  return table;
}

}  // namespace bqs
