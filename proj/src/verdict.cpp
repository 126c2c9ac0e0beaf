#include "koszul/verdict.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "koszul/cps.hpp"
#include "koszul/errors.hpp"
#include "koszul/homology.hpp"
#include "koszul/io.hpp"
#include "koszul/strata.hpp"

namespace koszul {

Verdict koszul_local_homology(const CellComplex& X, const FieldDesc& fd) {
  require_hypotheses(X);
  Verdict v;
  v.criterion = "local-homology";
  v.field = fd.name();
  const int d = X.dimension();

  const HomologyTable reduced = homology(X, fd, true);
  for (int i = 0; i < d; ++i)
    if (reduced.at(i) != 0) {
      Witness w;
      w.kind = "reduced_homology";
      w.degree = i;
      w.dim = reduced.at(i);
      v.witnesses.push_back(std::move(w));
    }

  const Stratification S = stratify(X, fd);
  std::vector<int> singular;
  for (int i = 0; i < X.size(); ++i)
    if (S.stratum[i] != Stratification::kNonSingular && S.stratum[i] >= 0 &&
        S.stratum[i] <= d - 2)
      singular.push_back(i);
  std::sort(singular.begin(), singular.end(), [&](int a, int b) {
    return std::make_tuple(S.stratum[a], X.cell(a).dim, X.cell(a).id) <
           std::make_tuple(S.stratum[b], X.cell(b).dim, X.cell(b).id);
  });
  for (int i : singular) {
    Witness w;
    w.kind = "stratum";
    w.n = S.stratum[i];
    w.cell = X.cell(i).id;
    w.cell_dim = X.cell(i).dim;
    w.dim = 1;
    v.witnesses.push_back(std::move(w));
  }
  v.koszul = v.witnesses.empty();
  return v;
}

Verdict koszul_cps(const CellComplex& X, const FieldDesc& fd) {
  require_hypotheses(X);
  Verdict v;
  v.criterion = "cps";
  v.field = fd.name();
  const int d = X.dimension();
  const CpsTable t = cps_table(X, fd);
  for (int n = 0; n < d; ++n)
    for (int k = 0; k < n; ++k)
      if (t.at(n, k) != 0) {
        Witness w;
        w.kind = "cps";
        w.n = n;
        w.k = k;
        w.dim = t.at(n, k);
        v.witnesses.push_back(std::move(w));
      }
  v.koszul = v.witnesses.empty();
  return v;
}

Verdict koszul_star_cohomology(const CellComplex& X, const FieldDesc& fd) {
  require_hypotheses(X);
  Verdict v;
  v.criterion = "star-cohomology";
  v.field = fd.name();
  const int d = X.dimension();

  const HomologyTable reduced = cohomology(X, fd, true);
  for (int n = 0; n < d; ++n)
    if (reduced.at(n) != 0) {
      Witness w;
      w.kind = "reduced_cohomology";
      w.degree = n;
      w.dim = reduced.at(n);
      v.witnesses.push_back(std::move(w));
    }

  std::vector<int> order(X.size());
  for (int i = 0; i < X.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_tuple(X.cell(a).dim, X.cell(a).id) <
           std::make_tuple(X.cell(b).dim, X.cell(b).id);
  });
  for (int i : order) {
    const int k = X.cell(i).dim;
    if (k + 2 >= d) continue;  // no degree satisfies k+1 < n < d
    const HomologyTable rel = star_relative_cohomology(X, i, fd);
    for (int n = k + 2; n < d; ++n)
      if (rel.at(n) != 0) {
        Witness w;
        w.kind = "star";
        w.degree = n;
        w.cell = X.cell(i).id;
        w.cell_dim = k;
        w.dim = rel.at(n);
        v.witnesses.push_back(std::move(w));
      }
  }
  v.koszul = v.witnesses.empty();
  return v;
}

CrossCheck cross_check(const CellComplex& X, const FieldDesc& fd) {
  CrossCheck c;
  c.field = fd.name();
  c.verdicts.push_back(koszul_local_homology(X, fd));
  c.verdicts.push_back(koszul_cps(X, fd));
  c.verdicts.push_back(koszul_star_cohomology(X, fd));
  c.koszul = c.verdicts[0].koszul;
  if (c.verdicts[1].koszul != c.koszul || c.verdicts[2].koszul != c.koszul)
    throw DisagreementError(
        "the three Koszulity criteria disagree; this indicates a bug, not a "
        "property of the input\n" +
        cross_check_dump(c));
  return c;
}

}  // namespace koszul
