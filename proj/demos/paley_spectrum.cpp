// Exact spectrum of the Paley graph on Z/13, checked against the numeric
// eigenvalues of its adjacency matrix, then the same for a unitary Cayley graph
// over a product ring.

#include <iostream>

#include <supercayley/supercayley.hpp>

using namespace supercayley;

static void show(const std::string& ring_text, const UnitSubgroupSpec& spec) {
  const RingSpec R = parse_ring_spec(ring_text);
  const SuperTheory t = build_theory(subgroup_from(R, spec));
  const SigmaTable table = sigma_table(t);
  const ConnectionSet S = unit_connection_set(t);
  const Spectrum sp = spectrum_super(table, S);

  std::cout << R.to_string() << ", U = " << t.unit_group().descriptor() << ", |S| = " << S.size() << '\n';
  for (const auto& e : sp.entries)
    std::cout << "  class of " << R.render_item(e.representative) << ": " << e.value.to_string() << "  ~ "
              << e.value.approx().real() << "  x" << e.multiplicity << '\n';
  const double dev = numeric_deviation(sp.multiset(), spectrum_numeric(CayleyGraph(S)));
  std::cout << "  max deviation from the eigensolver: " << dev << "\n\n";
}

int main() {
  show("Z/13", UnitSubgroupSpec::squares());
  show("Z/4 x GF(2)[x]/(x^2+x+1)", UnitSubgroupSpec::full());
}
