// Regenerates samples/*.sc1 from the built-in generators.
#include <fstream>
#include <iostream>
#include <string>

#include "homloc/generators.hpp"
#include "homloc/io.hpp"

int main(int argc, char** argv) {
  namespace gen = homloc::gen;
  const std::string dir = argc > 1 ? argv[1] : "samples";
  const std::pair<const char*, gen::RawComplex> samples[] = {
      {"hollow_triangle", gen::hollow_triangle()},
      {"cycle8", gen::cycle_graph(8)},
      {"tetrahedron_boundary", gen::tetrahedron_boundary()},
      {"torus7", gen::torus7()},
      {"two_cycles_joined", gen::two_cycles_joined()},
      {"two_disjoint_cycles", gen::two_disjoint_cycles()},
      {"three_circles", gen::three_circles()},
      {"disk_three_holes", gen::disk_with_three_holes()},
      {"tube", gen::tube({9, 7, 5, 3, 5, 7, 9})},
      {"pinched_annulus", gen::pinched_annulus()},
      {"torus_with_tail", gen::torus_with_tail(6, 6, 4).raw},
      {"nested_grid1", gen::nested_grid(1)},
  };
  for (const auto& [name, raw] : samples) {
    std::ofstream out(dir + "/" + name + ".sc1");
    if (!out) {
      std::cerr << "cannot write " << dir << "/" << name << ".sc1\n";
      return 1;
    }
    homloc::io::write_sc1(out, raw, name);
  }
  return 0;
}
