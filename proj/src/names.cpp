#include "msu/embedding.hpp"
#include "msu/metric_space.hpp"

namespace msu {

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Asymmetry: return "Asymmetry";
    case Axiom::NonzeroDiagonal: return "NonzeroDiagonal";
    case Axiom::NonpositiveOffDiagonal: return "NonpositiveOffDiagonal";
    case Axiom::TriangleViolation: return "TriangleViolation";
  }
  return "Unknown";
}

std::string_view comparability_name(Comparability c) {
  switch (c) {
    case Comparability::LeftEmbeds: return "LeftEmbeds";
    case Comparability::RightEmbeds: return "RightEmbeds";
    case Comparability::BothEmbed: return "BothEmbed";
    case Comparability::Incomparable: return "Incomparable";
  }
  return "Unknown";
}

}  // namespace msu
