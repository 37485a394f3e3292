#pragma once

#include <stdexcept>
#include <string>

namespace ale {

// All recoverable failures are exceptions rooted here; the CLI maps them to
// exit code 2 (configuration) or 1 (check failure) as appropriate.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error("division by zero: " + what) {}
};

// Two operands from different field instantiations (cyclotomic orders, jet
// variable sets, ...).
struct MixedFieldError : Error {
    explicit MixedFieldError(const std::string& what) : Error("mixed field instantiations: " + what) {}
};

struct CutoffMismatch : Error {
    explicit CutoffMismatch(const std::string& what) : Error("series cutoff mismatch: " + what) {}
};

struct NonUnitConstantTerm : Error {
    explicit NonUnitConstantTerm(const std::string& what) : Error("series constant term not a unit: " + what) {}
};

struct PoleAtOrigin : Error {
    explicit PoleAtOrigin(const std::string& what) : Error("pole at origin: " + what) {}
};

struct BoxOutsideTableau : Error {
    explicit BoxOutsideTableau(const std::string& what) : Error("box outside tableau: " + what) {}
};

struct KTooSmall : Error {
    explicit KTooSmall(int k) : Error("k must be >= 2, got " + std::to_string(k)) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

struct CongruenceViolation : Error {
    explicit CongruenceViolation(const std::string& what) : Error("holonomy congruence violated: " + what) {}
};

struct InconsistentContext : Error {
    explicit InconsistentContext(const std::string& what) : Error("inconsistent edge context: " + what) {}
};

// Carries the display form of the offending linear form.
struct VanishingFactor : Error {
    explicit VanishingFactor(const std::string& form) : Error("vanishing factor at sample point: " + form) {}
};

struct SectorExcluded : Error {
    explicit SectorExcluded(const std::string& what) : Error("sector excluded by fundamental-matter gate: " + what) {}
};

struct TooManyFlavours : Error {
    TooManyFlavours(int n, int r)
        : Error("N = " + std::to_string(n) + " fundamental flavours exceeds 2r = " + std::to_string(2 * r)) {}
};

struct KNotTwo : Error {
    explicit KNotTwo(int k) : Error("operation defined only for k = 2, got k = " + std::to_string(k)) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("config: " + what) {}
};

} // namespace ale
