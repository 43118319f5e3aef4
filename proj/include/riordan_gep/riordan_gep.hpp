#pragma once

#include "riordan_gep/error.hpp"
#include "riordan_gep/rational.hpp"
#include "riordan_gep/poly.hpp"
#include "riordan_gep/series.hpp"
#include "riordan_gep/matrix.hpp"
#include "riordan_gep/riordan.hpp"
#include "riordan_gep/stirling.hpp"
#include "riordan_gep/gep.hpp"
#include "riordan_gep/multinomial_w.hpp"
#include "riordan_gep/lagrange.hpp"
#include "riordan_gep/dirichlet.hpp"
#include "riordan_gep/expr.hpp"
#include "riordan_gep/output.hpp"
#include "riordan_gep/verify.hpp"
