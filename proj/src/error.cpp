#include "sec/error.hpp"

namespace sec {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::EdgeNotFound: return "EdgeNotFound";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotOneFactorable: return "NotOneFactorable";
    case ErrorKind::MuTooLarge: return "MuTooLarge";
    case ErrorKind::MuMismatch: return "MuMismatch";
    case ErrorKind::NoSuchColoring: return "NoSuchColoring";
    case ErrorKind::NotTwoSimultaneous: return "NotTwoSimultaneous";
    case ErrorKind::NotHamiltonian: return "NotHamiltonian";
    case ErrorKind::OddCircuit: return "OddCircuit";
    case ErrorKind::ResidualNotBipartite: return "ResidualNotBipartite";
    case ErrorKind::NoOcdcFound: return "NoOcdcFound";
    case ErrorKind::InvalidTrade: return "InvalidTrade";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::TooFewClasses: return "TooFewClasses";
    case ErrorKind::InvalidCover: return "InvalidCover";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::NotEvenGraph: return "NotEvenGraph";
    case ErrorKind::NotGraphic: return "NotGraphic";
    case ErrorKind::ElementBelowMu: return "ElementBelowMu";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::BipartitionViolation: return "BipartitionViolation";
    }
    return "Unknown";
}

} // namespace sec
