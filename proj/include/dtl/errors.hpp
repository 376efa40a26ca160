#pragma once

#include <stdexcept>
#include <string>

namespace dtl {

// Domain errors carry a stable machine-readable name next to the human
// message; the CLI prints "error: <name>: <message>" on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct DuplicateAddress : Error {
    explicit DuplicateAddress(const std::string& m) : Error("DuplicateAddress", m) {}
};
struct UnknownSymbol : Error {
    explicit UnknownSymbol(const std::string& m) : Error("UnknownSymbol", m) {}
};
struct UnknownLetter : Error {
    explicit UnknownLetter(const std::string& m) : Error("UnknownLetter", m) {}
};
struct IncompatibleAlphabets : Error {
    explicit IncompatibleAlphabets(const std::string& m) : Error("IncompatibleAlphabets", m) {}
};
struct NotGreibach : Error {
    explicit NotGreibach(const std::string& m) : Error("NotGreibach", m) {}
};
struct NotTransformed : Error {
    explicit NotTransformed(const std::string& m) : Error("NotTransformed", m) {}
};
struct NotProjective : Error {
    explicit NotProjective(const std::string& m) : Error("NotProjective", m) {}
};
struct InvalidLocalSpec : Error {
    explicit InvalidLocalSpec(const std::string& m) : Error("InvalidLocalSpec", m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};

}  // namespace dtl
