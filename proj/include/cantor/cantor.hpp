// Umbrella header.

#ifndef CANTOR_CANTOR_HPP_
#define CANTOR_CANTOR_HPP_

#include "algebra.hpp"    // IWYU pragma: export
#include "canonical.hpp"  // IWYU pragma: export
#include "classify.hpp"   // IWYU pragma: export
#include "error.hpp"      // IWYU pragma: export
#include "io.hpp"         // IWYU pragma: export
#include "machine.hpp"    // IWYU pragma: export
#include "minimize.hpp"   // IWYU pragma: export
#include "random.hpp"     // IWYU pragma: export
#include "synchro.hpp"    // IWYU pragma: export
#include "words.hpp"      // IWYU pragma: export

#endif  // CANTOR_CANTOR_HPP_
