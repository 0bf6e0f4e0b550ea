#ifndef KNIT_KNIT_HPP_
#define KNIT_KNIT_HPP_

#include "knit/enumerate.hpp"
#include "knit/errors.hpp"
#include "knit/finite_group.hpp"
#include "knit/graded.hpp"
#include "knit/graded_lie.hpp"
#include "knit/knit_group.hpp"
#include "knit/knit_lie.hpp"
#include "knit/rational.hpp"
#include "knit/report.hpp"

#endif  // KNIT_KNIT_HPP_
