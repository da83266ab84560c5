#pragma once

#include "bwb.hpp"
#include "charring.hpp"
#include "checked.hpp"
#include "flopkernel.hpp"
#include "glrep.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "sod.hpp"
#include "windows.hpp"
