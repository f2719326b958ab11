#pragma once

#include <vector>

#include "qhlin/intervals.hpp"
#include "qhlin/linquiver.hpp"
#include "qhlin/matrix.hpp"
#include "qhlin/treeorder.hpp"

namespace qhlin {

// maps[k-1] belongs to edge k and has shape dims[target-1] x dims[source-1].
struct QuiverRep {
  std::vector<int> dims;
  std::vector<Matrix> maps;

  int dim(int v) const { return dims[v - 1]; }
  int total_dim() const;
};

// One matrix per vertex, shape dims_N[v] x dims_M[v].
using RepMap = std::vector<Matrix>;

QuiverRep zero_rep(const LinearQuiver& q);
QuiverRep rep_of_interval(const LinearQuiver& q, const Interval& x);
QuiverRep direct_sum(const QuiverRep& m, const QuiverRep& n);
Interval projective_support(const LinearQuiver& q, int v);
Interval injective_support(const LinearQuiver& q, int v);
void check_rep(const LinearQuiver& q, const QuiverRep& m);

// Columns are flattened morphisms M -> N.
Matrix hom_basis(const LinearQuiver& q, const QuiverRep& m, const QuiverRep& n);
int hom_dim_oracle(const LinearQuiver& q, const QuiverRep& m, const QuiverRep& n);
int euler_form(const LinearQuiver& q, const std::vector<int>& d, const std::vector<int>& e);
int ext1_dim_oracle(const LinearQuiver& q, const QuiverRep& m, const QuiverRep& n);

Matrix path_map(const LinearQuiver& q, const QuiverRep& m, int from, int to);
RepMap compose_maps(const RepMap& g, const RepMap& f);
RepMap identity_map(const QuiverRep& m);
bool is_morphism(const LinearQuiver& q, const QuiverRep& m, const QuiverRep& n, const RepMap& f);
std::vector<Rational> flatten(const RepMap& f);
RepMap unflatten(const std::vector<Rational>& x, const QuiverRep& m, const QuiverRep& n);

// P = sum of P(v) over generators; images[k] lies in target at generators[k].
QuiverRep free_rep(const LinearQuiver& q, const std::vector<int>& generators);
RepMap map_from_free(const LinearQuiver& q, const std::vector<int>& generators,
                     const QuiverRep& target, const std::vector<Matrix>& images);

struct TwoTermResolution {
  std::vector<int> p0;  // generator vertices of P0
  std::vector<int> p1;  // generator vertices of P1
  QuiverRep P0, P1;
  RepMap d;             // P1 -> P0
  RepMap cover;         // P0 -> M
  QuiverRep target;
};

TwoTermResolution std_resolution(const LinearQuiver& q, const QuiverRep& m);
int ext1_dim_oracle(const LinearQuiver& q, const TwoTermResolution& res, const QuiverRep& n);

// Extension classes X -> Y[1], represented by f : P1_X -> Y modulo maps factoring through d.
struct ExtClass {
  RepMap f;
};

struct YonedaElement {
  int degree = 0;
  RepMap map;  // degree 0: X -> Y; degree 1: P1_X -> Y
};

class YonedaContext {
 public:
  explicit YonedaContext(const LinearQuiver& q) : q_(q) {}
  const LinearQuiver& quiver() const { return q_; }
  const TwoTermResolution& resolution(const QuiverRep& m);

  std::vector<YonedaElement> basis(const QuiverRep& x, const QuiverRep& y, int degree);
  YonedaElement compose(const QuiverRep& x, const QuiverRep& y, const QuiverRep& z,
                        const YonedaElement& outer, const YonedaElement& inner);
  bool is_zero(const QuiverRep& x, const QuiverRep& y, const YonedaElement& e);

 private:
  Matrix boundary_span(const QuiverRep& x, const QuiverRep& y);
  std::pair<RepMap, RepMap> lift(const QuiverRep& x, const QuiverRep& y, const RepMap& h);

  LinearQuiver q_;
  std::vector<std::pair<QuiverRep, TwoTermResolution>> cache_;
};

bool operator==(const QuiverRep& a, const QuiverRep& b);

// Quotient of P(i) by the subrepresentation generated at vertices not below i.
QuiverRep standard_oracle(const LinearQuiver& q, const PartialOrder& order, int i);
// Largest subrepresentation of I(i) supported on vertices below i.
QuiverRep costandard_oracle(const LinearQuiver& q, const PartialOrder& order, int i);
// Support of a representation with 0/1 dimensions on a contiguous range.
Interval support_of(const QuiverRep& m);

}  // namespace qhlin
