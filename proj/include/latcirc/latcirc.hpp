#pragma once

// Convenience include for the whole library.

#include "latcirc/certificates.hpp"
#include "latcirc/construct.hpp"
#include "latcirc/core.hpp"
#include "latcirc/numeric.hpp"
#include "latcirc/polygons.hpp"
#include "latcirc/spectra.hpp"
#include "latcirc/tori.hpp"
