#include "aritygap/error.hpp"

namespace aritygap {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::arity_mismatch: return "ArityMismatch";
    case ErrorCode::carrier_mismatch: return "CarrierMismatch";
    case ErrorCode::constant_function: return "ConstantFunction";
    case ErrorCode::arity_gap_undefined: return "ArityGapUndefined";
    case ErrorCode::inessential_variable: return "InessentialVariable";
    case ErrorCode::wrong_arity: return "WrongArity";
    case ErrorCode::non_boolean_domain: return "NonBooleanDomain";
    case ErrorCode::not_pseudo_directed: return "NotPseudoDirected";
    case ErrorCode::not_bidirected: return "NotBidirected";
    case ErrorCode::not_order_preserving: return "NotOrderPreserving";
    case ErrorCode::not_distributive: return "NotDistributive";
    case ErrorCode::not_a_chain: return "NotAChain";
    case ErrorCode::not_a_lattice: return "NotALattice";
    case ErrorCode::not_a_poset: return "NotAPoset";
    case ErrorCode::boundary_violation: return "BoundaryViolation";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace aritygap
