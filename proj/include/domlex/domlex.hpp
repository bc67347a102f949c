#pragma once

#include "domlex/bigint.hpp"
#include "domlex/catalog.hpp"
#include "domlex/closed_forms.hpp"
#include "domlex/domination.hpp"
#include "domlex/errors.hpp"
#include "domlex/expr.hpp"
#include "domlex/graph.hpp"
#include "domlex/graph_io.hpp"
#include "domlex/hunt.hpp"
#include "domlex/isomorphism.hpp"
#include "domlex/polynomial.hpp"
#include "domlex/verify.hpp"
