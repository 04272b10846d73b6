#ifndef QXSEP_ERROR_HPP
#define QXSEP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qxsep {

// Error codes, grouped by how the CLI / C API maps them to exit status:
// parse_error and internal map to status 1, everything else is a
// violated operation precondition and maps to status 2.
enum class Errc {
    parse_error,
    internal,
    division_by_zero_poly,
    both_zero,
    zero_polynomial,
    dimension_mismatch,
    ambient_mismatch,
    not_primary,
    zero_element,
    prime_mismatch,
    rank_mismatch,
    not_in_ambient,
    element_in_subgroup,
    not_isolated,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

    bool is_precondition() const {
        return code_ != Errc::parse_error && code_ != Errc::internal;
    }

  private:
    Errc code_;
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error(Errc::parse_error, what) {}
};

}  // namespace qxsep

#endif
