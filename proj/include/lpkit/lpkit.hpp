#pragma once

#include "fields.hpp"
#include "parameter_array.hpp"
#include "matrices.hpp"
#include "families.hpp"
#include "theorems.hpp"
#include "sweep.hpp"
#include "json_io.hpp"
