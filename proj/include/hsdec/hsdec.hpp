#pragma once

#include "rational.hpp"
#include "word.hpp"
#include "height.hpp"
#include "orbit.hpp"
#include "invariants.hpp"
#include "disks.hpp"
#include "families.hpp"
#include "entropy.hpp"
#include "survey.hpp"
