#pragma once

#include "doomlc/diagnostic.hpp"
#include "doomlc/model.hpp"
#include "doomlc/parser.hpp"
#include "doomlc/printer.hpp"
#include "doomlc/resolve.hpp"
#include "doomlc/validator.hpp"
#include "doomlc/ir.hpp"
#include "doomlc/converter.hpp"
#include "doomlc/emit.hpp"
#include "doomlc/emit_sql.hpp"
#include "doomlc/emit_classes.hpp"
#include "doomlc/emit_api.hpp"
#include "doomlc/emit_dot.hpp"
#include "doomlc/ir_json.hpp"
#include "doomlc/pipeline.hpp"
