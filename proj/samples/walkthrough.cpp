// Reads the 2-globe from globe.json, looks at its nerve, and certifies the
// comparison map for the arrow up to dimension 4.
#include <iostream>

#include "orient/filtration.hpp"
#include "orient/theta.hpp"

using namespace orient;

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : SAMPLES_DIR;
  auto globe = share(complex_from_json(read_json_file(dir + "/globe.json")));
  auto arrow = share(complex_from_json(read_json_file(dir + "/arrow.json")));

  auto n = rs_nerve(globe, 4);
  std::cout << "nerve of the 2-globe, non-degenerate simplices:";
  for (int d = 0; d <= 4; ++d) std::cout << ' ' << n->msset()->of_dim(d).size();
  std::cout << '\n';

  // suspect profile of every simplex outside the image of the suspended nerve
  auto f = build_filtration(arrow, 4);
  for (const auto& p : f.analysis->profiles())
    if (f.analysis->in_complement(p.id)) std::cout << "  " << simplex_name(p) << (p.suspect ? " suspect" : "") << '\n';

  auto cert = certify_filtration(f);
  std::cout << "certificate: " << (cert.complete() ? "complete" : "incomplete") << ", " << cert.steps.size() << " steps\n";

  // same object built as a Theta object; only the basis labels differ
  auto t = theta_adc(parse_theta("[1|[1|[0]]]"));
  const bool same = t->differentials() == globe->differentials() && t->augmentation() == globe->augmentation();
  std::cout << "[1|[1|[0]]] matches the globe up to labels: " << (same ? "yes" : "no") << '\n';
  return cert.complete() ? 0 : 1;
}
