#pragma once

// Umbrella header: the full pipeline from polynomial text to the report of
// monodromy eigenspaces, pole order filtration and derived invariants.

#include "polemono/config.hpp"
#include "polemono/errors.hpp"
#include "polemono/exact_elim.hpp"
#include "polemono/hilbert.hpp"
#include "polemono/invariants.hpp"
#include "polemono/matrix_builder.hpp"
#include "polemono/milnor_number.hpp"
#include "polemono/mod_elim.hpp"
#include "polemono/modular.hpp"
#include "polemono/monomial.hpp"
#include "polemono/parser.hpp"
#include "polemono/pipeline.hpp"
#include "polemono/polynomial.hpp"
#include "polemono/rank.hpp"
#include "polemono/rational.hpp"
#include "polemono/report.hpp"
#include "polemono/sparse_matrix.hpp"
#include "polemono/spectral.hpp"
#include "polemono/thread_pool.hpp"
