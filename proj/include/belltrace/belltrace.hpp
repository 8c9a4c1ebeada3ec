#pragma once

#include "belltrace/arith.hpp"
#include "belltrace/bell.hpp"
#include "belltrace/bigint.hpp"
#include "belltrace/ffield.hpp"
#include "belltrace/identities.hpp"
#include "belltrace/modint.hpp"
#include "belltrace/poly.hpp"
#include "belltrace/quadratic.hpp"
#include "belltrace/series.hpp"
#include "belltrace/verify.hpp"
