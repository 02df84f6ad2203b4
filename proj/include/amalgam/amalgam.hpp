#pragma once

#include "amalgam/amalgamation.hpp"
#include "amalgam/checks.hpp"
#include "amalgam/classify.hpp"
#include "amalgam/corpus.hpp"
#include "amalgam/element_set.hpp"
#include "amalgam/error.hpp"
#include "amalgam/exact_local.hpp"
#include "amalgam/hom.hpp"
#include "amalgam/ideal.hpp"
#include "amalgam/lattice.hpp"
#include "amalgam/lattice_cache.hpp"
#include "amalgam/module.hpp"
#include "amalgam/plocal.hpp"
#include "amalgam/polynomial.hpp"
#include "amalgam/pruefer_gaussian.hpp"
#include "amalgam/quotient.hpp"
#include "amalgam/report.hpp"
#include "amalgam/ring.hpp"
#include "amalgam/spec.hpp"
#include "amalgam/status.hpp"
