#pragma once

// Tables and topologies shared by the test suites, written in the same
// letter form the file format uses.

#include <sstream>
#include <string>
#include <vector>

#include "tq/compat.hpp"
#include "tq/quandle.hpp"
#include "tq/text_io.hpp"
#include "tq/topology.hpp"

namespace fixtures {

inline tq::QuandleTable quandle(const std::string& file_text) {
  std::istringstream in(file_text);
  return tq::load_quandle(in);
}

inline tq::Preorder topology(const std::string& file_text) {
  std::istringstream in(file_text);
  return tq::load_topology(in);
}

// order 3
inline tq::QuandleTable t3_trivial() {
  return quandle("3\na a a\nb b b\nc c c\n");
}
inline tq::QuandleTable t3_dihedral() {
  return quandle("3\na c b\nc b a\nb a c\n");
}
inline tq::QuandleTable t3_two_orbit() {
  return quandle("3\na a a\nc b b\nb c c\n");
}

// order 4, in listing order
inline tq::QuandleTable t4_trivial() {
  return quandle("4\na a a a\nb b b b\nc c c c\nd d d d\n");
}
inline tq::QuandleTable t4_swap_bc() {  // orbits {a} {b,c} {d}
  return quandle("4\na a a a\nb b b c\nc c c b\nd d d d\n");
}
inline tq::QuandleTable t4_cycle_abc() {  // orbits {a,b,c} {d}
  return quandle("4\na a a b\nb b b c\nc c c a\nd d d d\n");
}
inline tq::QuandleTable t4_swap_ab() {  // orbits {a,b} {c} {d}
  return quandle("4\na a b b\nb b a a\nc c c c\nd d d d\n");
}
inline tq::QuandleTable t4_dihedral3_plus() {  // orbits {a} {b,c,d}
  return quandle("4\na a a a\nb b d c\nc d c b\nd c b d\n");
}
inline tq::QuandleTable t4_two_swaps() {  // orbits {a,b} {c,d}
  return quandle("4\na a b b\nb b a a\nd d c c\nc c d d\n");
}
inline tq::QuandleTable t4_tetrahedral() {
  return quandle("4\na d b c\nc b d a\nd a c b\nb c a d\n");
}

inline std::vector<tq::QuandleTable> listed_order3() {
  return {t3_trivial(), t3_dihedral(), t3_two_orbit()};
}
inline std::vector<tq::QuandleTable> listed_order4() {
  return {t4_trivial(),        t4_swap_bc(),   t4_cycle_abc(), t4_swap_ab(),
          t4_dihedral3_plus(), t4_two_swaps(), t4_tetrahedral()};
}

}  // namespace fixtures
