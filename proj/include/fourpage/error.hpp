#ifndef FOURPAGE_ERROR_HPP
#define FOURPAGE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fourpage {

enum class ErrorKind {
    MalformedRecord,
    LabelCountError,
    EmptyDiagram,
    NonPlanarTrace,
    NotBipartite,
    Disconnected,
    NotSingleCircle,
    NotNonAlternating,
    SplitDiagram,
    NotReduced,
    ComponentCollapse,
    InvalidPresentation,
    NonPositiveEpsilon,
    CapExceeded,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as this exception; kind() is the
// machine-readable category.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class NotReducedError : public Error {
public:
    explicit NotReducedError(std::vector<int> crossings);

    // Ids of the nugatory crossings.
    const std::vector<int>& crossings() const noexcept { return crossings_; }

private:
    std::vector<int> crossings_;
};

}  // namespace fourpage

#endif  // FOURPAGE_ERROR_HPP
