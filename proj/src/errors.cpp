#include "htg/errors.hpp"

namespace htg {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::NOdd: return "NOdd";
    case Errc::NTooSmall: return "NTooSmall";
    case Errc::EllRange: return "EllRange";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::DegenerateMultigraph: return "DegenerateMultigraph";
    case Errc::NotNormalForm: return "NotNormalForm";
    case Errc::BadParameter: return "BadParameter";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotCubic: return "NotCubic";
    case Errc::Graph6Format: return "Graph6Format";
  }
  return "Unknown";
}

}  // namespace htg
