#pragma once

#include "ucf/bfamily.hpp"
#include "ucf/bounds.hpp"
#include "ucf/chains.hpp"
#include "ucf/constructions.hpp"
#include "ucf/core.hpp"
#include "ucf/enumeration.hpp"
#include "ucf/error.hpp"
#include "ucf/io.hpp"
#include "ucf/rational.hpp"
