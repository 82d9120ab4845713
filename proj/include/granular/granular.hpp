#pragma once

#include "granular/error.hpp"
#include "granular/universe.hpp"
#include "granular/family.hpp"
#include "granular/relation.hpp"
#include "granular/operator_table.hpp"
#include "granular/format.hpp"
#include "granular/granulation.hpp"
#include "granular/tolerance.hpp"
#include "granular/closure.hpp"
#include "granular/approx.hpp"
#include "granular/axiomatics.hpp"
#include "granular/enumerate.hpp"
#include "granular/io.hpp"
#include "granular/report.hpp"
#include "granular/verifier.hpp"
