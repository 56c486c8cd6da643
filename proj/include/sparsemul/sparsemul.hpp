#pragma once

#include "crt_lift.hpp"
#include "degree_analysis.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "formulas.hpp"
#include "gf2poly.hpp"
#include "number_theory.hpp"
#include "order.hpp"
#include "report.hpp"
#include "tables.hpp"
#include "tnomial.hpp"
