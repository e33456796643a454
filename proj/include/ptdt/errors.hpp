#pragma once

#include <stdexcept>

namespace ptdt {

// Input outside an operation's domain (bad cell region, interlacing violated, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A toggle schedule that is not a valid order on the region, or that leaves residue.
struct schedule_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A series or operator word that has infinitely many terms below the degree bound.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested enumeration larger than the supported bounds.
struct resource_error : std::length_error {
    using std::length_error::length_error;
};

}  // namespace ptdt
