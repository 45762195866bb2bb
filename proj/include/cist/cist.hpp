#ifndef CIST_CIST_HPP
#define CIST_CIST_HPP

#include "cist/condition.hpp"
#include "cist/errors.hpp"
#include "cist/family.hpp"
#include "cist/hypercube.hpp"
#include "cist/io/dot.hpp"
#include "cist/io/edge_list.hpp"
#include "cist/io/family_json.hpp"
#include "cist/lift.hpp"
#include "cist/q7.hpp"
#include "cist/routing.hpp"
#include "cist/tree.hpp"

#endif // CIST_CIST_HPP
