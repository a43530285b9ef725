#ifndef POBS_ERROR_HPP
#define POBS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pobs {

// Every failure raised by the library carries a module-qualified code such as
// "polyring.parse" or "obstruct.input_inconsistent".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace pobs

#endif  // POBS_ERROR_HPP
