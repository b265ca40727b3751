#ifndef GRIDSHARE_ERRORS_HPP
#define GRIDSHARE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gridshare {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Case-file problems.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& msg) : Error("schema: " + msg) {}
};
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error("invariant: " + msg) {}
};
class TopologyError : public Error {
 public:
  explicit TopologyError(const std::string& msg) : Error("topology: " + msg) {}
};

// Numeric / dimensional misuse of an API.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error("domain: " + msg) {}
};
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error("dimension: " + msg) {}
};

// Model building.
class InactiveCommunityError : public Error {
 public:
  explicit InactiveCommunityError(const std::string& msg) : Error("inactive community: " + msg) {}
};
class MissingScheduleError : public Error {
 public:
  explicit MissingScheduleError(const std::string& msg) : Error("missing schedule: " + msg) {}
};
class InfeasibleTopologyError : public Error {
 public:
  explicit InfeasibleTopologyError(const std::string& msg) : Error("infeasible topology: " + msg) {}
};
class UnhousedVariableError : public Error {
 public:
  explicit UnhousedVariableError(const std::string& msg) : Error("unhoused variable: " + msg) {}
};

// Solving.
class BackendError : public Error {
 public:
  explicit BackendError(const std::string& msg) : Error("backend: " + msg) {}
};
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& msg) : Error("infeasible: " + msg) {}
};
class UnboundedError : public Error {
 public:
  explicit UnboundedError(const std::string& msg) : Error("unbounded: " + msg) {}
};
class BigMSaturatedError : public Error {
 public:
  explicit BigMSaturatedError(const std::string& msg) : Error("big-M saturated: " + msg) {}
};

// Allocation.
class IncompleteTableError : public Error {
 public:
  explicit IncompleteTableError(const std::string& msg) : Error("incomplete table: " + msg) {}
};
class ZeroCapacityError : public Error {
 public:
  explicit ZeroCapacityError(const std::string& msg) : Error("zero capacity: " + msg) {}
};

}  // namespace gridshare

#endif
