#pragma once

#include "fejerlab/approx.hpp"
#include "fejerlab/blowup.hpp"
#include "fejerlab/convolution.hpp"
#include "fejerlab/csv.hpp"
#include "fejerlab/error.hpp"
#include "fejerlab/fourier.hpp"
#include "fejerlab/grid.hpp"
#include "fejerlab/hardy.hpp"
#include "fejerlab/kernel.hpp"
#include "fejerlab/maximal.hpp"
#include "fejerlab/operator.hpp"
#include "fejerlab/piecewise.hpp"
#include "fejerlab/sampled.hpp"
#include "fejerlab/weight.hpp"
