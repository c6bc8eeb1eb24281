#pragma once

#include "chromatic.hpp"
#include "compositions.hpp"
#include "dyck.hpp"
#include "keys.hpp"
#include "parallel.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"
#include "slide.hpp"
