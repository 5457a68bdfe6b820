#pragma once

// Umbrella header: eigenfunctions, Shannon entropies, entropic uncertainty
// margins, and canonical-ensemble thermodynamics of a spinless charged
// particle in a uniform magnetic field with a complex potential tilt.

#include "landau/csv.hpp"
#include "landau/entropy.hpp"
#include "landau/errors.hpp"
#include "landau/model.hpp"
#include "landau/momentum.hpp"
#include "landau/parallel.hpp"
#include "landau/position.hpp"
#include "landau/quadrature.hpp"
#include "landau/reference.hpp"
#include "landau/thermo.hpp"
