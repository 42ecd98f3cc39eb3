#ifndef HARPER_HARPER_HPP
#define HARPER_HARPER_HPP

#include "harper/analysis.hpp"
#include "harper/io.hpp"

#endif
