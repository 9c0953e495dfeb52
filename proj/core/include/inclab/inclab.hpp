#pragma once

#include "inclab/elastostatics.hpp"
#include "inclab/errors.hpp"
#include "inclab/geometry.hpp"
#include "inclab/hodograph.hpp"
#include "inclab/layerpot.hpp"
#include "inclab/nelder_mead.hpp"
#include "inclab/newtonian.hpp"
#include "inclab/polarization.hpp"
#include "inclab/quadrature.hpp"
#include "inclab/shapeopt.hpp"
#include "inclab/transmission.hpp"
