#pragma once

#include "negrules/config.hpp"
#include "negrules/error.hpp"
#include "negrules/itemset.hpp"
#include "negrules/mining.hpp"
#include "negrules/oracle.hpp"
#include "negrules/pipeline.hpp"
#include "negrules/rational.hpp"
#include "negrules/rules.hpp"
#include "negrules/synth.hpp"
#include "negrules/transactions.hpp"
