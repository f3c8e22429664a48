#pragma once

#include "kohnert/closure.hpp"
#include "kohnert/crystal.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"
#include "kohnert/io.hpp"
#include "kohnert/labeling.hpp"
#include "kohnert/magyar.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/schur_oracle.hpp"
