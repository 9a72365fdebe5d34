#ifndef CANTOR_ERROR_HPP_
#define CANTOR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cantor {

  enum class ErrorCode {
    invalid_argument,
    inadmissible_word,
    not_a_prefix,
    unbounded_guaranteed_output,
    incomplete_response,
    degenerate,
    not_invertible,
    not_synchronizing,
    not_bisynchronizing,
    disconnected,
    unreachable_states,
    parse,
    rejection_budget
  };

  inline char const* to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::invalid_argument:
        return "invalid argument";
      case ErrorCode::inadmissible_word:
        return "inadmissible word";
      case ErrorCode::not_a_prefix:
        return "not a prefix";
      case ErrorCode::unbounded_guaranteed_output:
        return "guaranteed output unbounded";
      case ErrorCode::incomplete_response:
        return "incomplete response";
      case ErrorCode::degenerate:
        return "degenerate transducer";
      case ErrorCode::not_invertible:
        return "not invertible by finite transducer";
      case ErrorCode::not_synchronizing:
        return "not synchronizing";
      case ErrorCode::not_bisynchronizing:
        return "not bi-synchronizing";
      case ErrorCode::disconnected:
        return "disconnected core";
      case ErrorCode::unreachable_states:
        return "unreachable states present";
      case ErrorCode::parse:
        return "parse error";
      case ErrorCode::rejection_budget:
        return "rejection budget exceeded";
    }
    return "unknown error";
  }

  //! Every failure raised by the library carries one of the codes above so
  //! callers (and the CLI) can branch on the kind without parsing messages.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace cantor

#endif  // CANTOR_ERROR_HPP_
