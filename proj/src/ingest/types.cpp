#include "gnssro/ingest/types.hpp"

#include <cstdio>

namespace gnssro {

char constellation_letter(Constellation c) {
  switch (c) {
    case Constellation::GPS: return 'G';
    case Constellation::GAL: return 'E';
    case Constellation::BDS: return 'C';
    case Constellation::GLO: return 'R';
  }
  return '?';
}

std::optional<Constellation> constellation_from_letter(char c) {
  switch (c) {
    case 'G': return Constellation::GPS;
    case 'E': return Constellation::GAL;
    case 'C': return Constellation::BDS;
    case 'R': return Constellation::GLO;
    default: return std::nullopt;
  }
}

std::string SatId::str() const {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%c%02d", constellation_letter(constellation), prn);
  return buf;
}

}  // namespace gnssro
