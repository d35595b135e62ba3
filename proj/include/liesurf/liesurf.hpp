#pragma once

// Exact invariant-form geometry on 4-dimensional Lie algebras with complex
// structure: cohomology, Hodge theory, Chern curvature, Chern-Ricci flow,
// and geometric-formality verdicts, all over the Gaussian rationals.

#include "liesurf/algebra.hpp"
#include "liesurf/bigint.hpp"
#include "liesurf/curvature.hpp"
#include "liesurf/errors.hpp"
#include "liesurf/flow.hpp"
#include "liesurf/form.hpp"
#include "liesurf/formality.hpp"
#include "liesurf/harmonic.hpp"
#include "liesurf/hodge.hpp"
#include "liesurf/indices.hpp"
#include "liesurf/matrix.hpp"
#include "liesurf/metric.hpp"
#include "liesurf/operators.hpp"
#include "liesurf/rational.hpp"
#include "liesurf/scalar.hpp"
