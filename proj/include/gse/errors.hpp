#pragma once

#include <stdexcept>
#include <string>

namespace gse {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction / parsing
struct ParseError : Error {
    int line = 0;
    ParseError(const std::string& msg, int line_)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};
struct DuplicateEdge : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct NonPositiveWeight : Error { using Error::Error; };
struct EmptyGraph : Error { using Error::Error; };
struct IsolatedNode : Error { using Error::Error; };
struct ZeroCentralityEdge : Error { using Error::Error; };

// numerics
struct ConvergenceFailure : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };
struct NearSingularPencil : Error { using Error::Error; };

// embedding
struct ZeroSignal : Error { using Error::Error; };
struct AllValuesBelowFloor : Error { using Error::Error; };

// tasks
struct DisconnectedJointGraph : Error { using Error::Error; };
struct DisconnectedSimilarityGraph : Error { using Error::Error; };
struct DegenerateClustering : Error { using Error::Error; };
struct EmptyFailureSet : Error { using Error::Error; };
struct InvalidCounts : Error { using Error::Error; };

}  // namespace gse
