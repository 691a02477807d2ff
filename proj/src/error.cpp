#include "fourpage/error.hpp"

#include <sstream>

namespace fourpage {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedRecord: return "MalformedRecord";
        case ErrorKind::LabelCountError: return "LabelCountError";
        case ErrorKind::EmptyDiagram: return "EmptyDiagram";
        case ErrorKind::NonPlanarTrace: return "NonPlanarTrace";
        case ErrorKind::NotBipartite: return "NotBipartite";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NotSingleCircle: return "NotSingleCircle";
        case ErrorKind::NotNonAlternating: return "NotNonAlternating";
        case ErrorKind::SplitDiagram: return "SplitDiagram";
        case ErrorKind::NotReduced: return "NotReduced";
        case ErrorKind::ComponentCollapse: return "ComponentCollapse";
        case ErrorKind::InvalidPresentation: return "InvalidPresentation";
        case ErrorKind::NonPositiveEpsilon: return "NonPositiveEpsilon";
        case ErrorKind::CapExceeded: return "CapExceeded";
    }
    return "Unknown";
}

namespace {

std::string not_reduced_message(const std::vector<int>& crossings) {
    std::ostringstream out;
    out << "diagram is not reduced; nugatory crossings:";
    for (int x : crossings) out << ' ' << x;
    return out.str();
}

}  // namespace

NotReducedError::NotReducedError(std::vector<int> crossings)
    : Error(ErrorKind::NotReduced, not_reduced_message(crossings)),
      crossings_(std::move(crossings)) {}

}  // namespace fourpage
