// Times the parallel frontier closure against the serial reference on the
// genus-3 involution images mod 2 and checks they agree element for element.

#include <chrono>
#include <iostream>

#include "mcgcert/quotient.hpp"
#include "mcgcert/words.hpp"

using namespace mcgcert;

int main() {
  SurfaceParams p = make_params(3, 0);
  HomologyLattice lat = make_lattice(3, 0);
  CurveRegistry reg = build_registry(p);
  WordPlan plan = build_word_plan(reg, 6);

  std::vector<ModPMat> gens;
  for (const auto& e : plan.gens.gens)
    gens.push_back(reduce_handle_block(lat, e.matrix, 2));

  auto time_one = [&](auto&& fn, const char* label) {
    auto t0 = std::chrono::steady_clock::now();
    ClosureResult r = fn(gens, 2000000);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << label << ": order " << r.order << " in " << ms << " ms\n";
    return r;
  };

  ClosureResult serial = time_one(enumerate_generated_serial, "serial reference");
  ClosureResult parallel = time_one(enumerate_generated, "parallel closure");

  if (serial.capped != parallel.capped || serial.order != parallel.order) {
    std::cout << "MISMATCH between serial and parallel closure\n";
    return 1;
  }
  std::cout << "results agree\n";
  return 0;
}
