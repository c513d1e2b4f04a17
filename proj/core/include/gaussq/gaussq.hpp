#pragma once

#include "gaussq/asympt.hpp"
#include "gaussq/bipoly.hpp"
#include "gaussq/cyclotomic.hpp"
#include "gaussq/dissect.hpp"
#include "gaussq/errors.hpp"
#include "gaussq/eulerfrob.hpp"
#include "gaussq/genfun.hpp"
#include "gaussq/poly.hpp"
#include "gaussq/qbinom.hpp"
#include "gaussq/series.hpp"
#include "gaussq/text.hpp"
