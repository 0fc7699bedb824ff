#pragma once

#include "waring/apolarity.hpp"
#include "waring/cyclotomic.hpp"
#include "waring/decompose.hpp"
#include "waring/error.hpp"
#include "waring/forms.hpp"
#include "waring/json_io.hpp"
#include "waring/linear_system.hpp"
#include "waring/polynomial.hpp"
#include "waring/rank.hpp"
#include "waring/rational.hpp"
