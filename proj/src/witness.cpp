#include "witness.hpp"

#include <stdexcept>
#include <utility>

#include "clique.hpp"

namespace mrn {

GoodnessReport verify_good(const TwoColoring& coloring, int clique_order,
                           int stripe_count) {
  if (clique_order < 3) throw std::invalid_argument("m must be >= 3");
  if (stripe_count < 1) throw std::invalid_argument("n must be >= 1");

  GoodnessReport report;

  const Graph g1 = coloring.color_subgraph(1);
  CliqueDetector detector(g1, PartLabels::from_shape(coloring.shape()));
  std::vector<int> best;
  report.omega1 = detector.maximum(&best);
  if (report.omega1 >= clique_order)
    report.clique_cert.emplace(best.begin(), best.begin() + clique_order);

  const Graph g2 = coloring.color_subgraph(2);
  const std::vector<MatchedEdge> matching = max_matching(g2);
  report.nu2 = static_cast<int>(matching.size());
  if (report.nu2 >= stripe_count)
    report.matching_cert.emplace(matching.begin(),
                                 matching.begin() + stripe_count);

  report.good =
      report.omega1 < clique_order && report.nu2 < stripe_count;
  return report;
}

TwoColoring build_extremal(const RamseyQuery& q) {
  q.validate();
  const RamseyValue target = ramsey_value(q);
  if (!target.finite)
    throw std::invalid_argument("no finite value when j <= m-1");

  Shape shape = Shape::make(q.parts, target.value - 1);
  std::vector<std::uint8_t> colors(shape.edge_count(), 1);
  const int t = shape.part_size();
  // the last j + 2 - m parts start at part m - 2
  for (int p = q.clique_order - 2; p < q.parts; ++p)
    for (int r = p + 1; r < q.parts; ++r)
      for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
          colors[shape.edge_rank(shape.vertex(p, a), shape.vertex(r, b))] = 2;
  return TwoColoring(std::move(shape), std::move(colors));
}

TwoColoring build_infinite_regime(const RamseyQuery& q, int part_size) {
  q.validate();
  if (q.parts > q.clique_order - 1)
    throw std::invalid_argument("all-color-1 witness needs j <= m-1");
  return TwoColoring::uniform(Shape::make(q.parts, part_size), 1);
}

SweepResult witness_sweep(int clique_lo, int clique_hi, int parts_hi,
                          int stripes_lo, int stripes_hi) {
  SweepResult result;
  for (int m = clique_lo; m <= clique_hi; ++m)
    for (int j = m; j <= parts_hi; ++j)
      for (int n = stripes_lo; n <= stripes_hi; ++n) {
        const RamseyQuery q{j, m, n};
        const TwoColoring witness = build_extremal(q);
        const GoodnessReport report = verify_good(witness, m, n);
        const int t = witness.shape().part_size();
        const int width = j + 2 - m;
        const bool as_predicted = report.good &&
                                  report.omega1 == (t == 0 ? 0 : m - 1) &&
                                  report.nu2 == width * t / 2;
        ++result.checked;
        if (!as_predicted) result.failures.push_back(q);
      }
  return result;
}

}  // namespace mrn
