#pragma once

#include "lss/errors.hpp"
#include "lss/polyengine.hpp"
#include "lss/treekit.hpp"
#include "lss/lssbasis.hpp"
#include "lss/srcomplex.hpp"
#include "lss/krull.hpp"
