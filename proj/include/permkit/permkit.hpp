#pragma once

#include "permkit/class_expr.hpp"
#include "permkit/coloring.hpp"
#include "permkit/compose_ops.hpp"
#include "permkit/error.hpp"
#include "permkit/finite_class.hpp"
#include "permkit/limits.hpp"
#include "permkit/merge_split.hpp"
#include "permkit/permutation.hpp"
#include "permkit/realize.hpp"
#include "permkit/report.hpp"
#include "permkit/verify.hpp"
