#ifndef POLYMIR_POLYMIR_HPP
#define POLYMIR_POLYMIR_HPP

#include "polymir/base.hpp"
#include "polymir/cell_complex.hpp"
#include "polymir/corner.hpp"
#include "polymir/coxeter.hpp"
#include "polymir/homology.hpp"
#include "polymir/json_io.hpp"
#include "polymir/mirrored.hpp"
#include "polymir/polyprod.hpp"
#include "polymir/presentation.hpp"
#include "polymir/report.hpp"
#include "polymir/simplicial.hpp"
#include "polymir/snf.hpp"

#endif
