#pragma once

#include <gmpxx.h>

namespace qtet {

// n! over arbitrary-precision integers, backed by a process-wide growable
// table (concurrent reads, serialized growth). The returned reference stays
// valid for the lifetime of the process.
const mpz_class& factorial(unsigned n);

}  // namespace qtet
