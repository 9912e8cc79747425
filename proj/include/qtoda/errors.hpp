#pragma once

#include <stdexcept>
#include <string>

namespace qtoda {

// A parameter point failed (or would fail) its genericity certificate: a
// denominator factor or an eigenvalue divisor vanished.
class NonGenericPoint : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two series/operators with incompatible cone variants were combined.
class VariantMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Random drawing of a generic parameter point exhausted its retry budget.
class GenericityExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qtoda
