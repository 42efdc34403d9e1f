#pragma once

#include <gmpxx.h>

namespace moment_forge {

/// n! for n >= 0. Memoized; safe to call concurrently.
mpz_class factorial(long n);

/// n!! for n >= -1, with (-1)!! = 0!! = 1. Memoized; safe to call
/// concurrently.
mpz_class double_factorial(long n);

}  // namespace moment_forge
