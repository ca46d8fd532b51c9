#pragma once

#include "error.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "isomorphism.hpp"
#include "matching.hpp"
#include "polynomial.hpp"
#include "spectral.hpp"
#include "families.hpp"
#include "theorems.hpp"
#include "identities.hpp"
#include "reports.hpp"
#include "enumeration.hpp"
