#pragma once

#include "coherence.hpp"
#include "derivation.hpp"
#include "derivation_spec.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"
#include "pipeline.hpp"
#include "presentation_file.hpp"
#include "quadratic.hpp"
#include "rational.hpp"
#include "resolution.hpp"
#include "sparse.hpp"
#include "superpotential.hpp"
#include "word.hpp"
#include "yoneda.hpp"
