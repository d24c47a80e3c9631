// catlas command line: loads workspace files, dispatches one command, and
// prints the report. Exit codes: 0 success/Holds, 1 Fails with witness,
// 2 input error, 3 resource limit / Unknown.

#include <CLI11.hpp>
#include <iostream>

#include "catlas/commands.hpp"

namespace {

int exit_code_for(const catlas::CatError& err) {
  switch (err.code()) {
    case catlas::ErrorCode::ResourceLimit:
    case catlas::ErrorCode::EnumerationFailed:
      return 3;
    case catlas::ErrorCode::NotNormal:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catlas: classifying-space and Lascar-group computations for finite categories"};
  app.require_subcommand(1);

  catlas::io::CommandOptions opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("workspace", opt.files, "workspace JSON files")->expected(-1);
    cmd->add_option("--format", opt.format, "report format: text|json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-steps", opt.max_steps, "search step budget");
    return cmd;
  };

  auto* validate = add_common(app.add_subcommand("validate", "validate workspace files"));
  (void)validate;

  auto* props = add_common(app.add_subcommand("props", "decide category properties"));
  props->add_option("--category", opt.category)->required();
  props->add_option("--prop", opt.props, "property names (default: all)");

  auto* pi1 = add_common(app.add_subcommand("pi1", "fundamental group presentation"));
  pi1->add_option("--category", opt.category)->required();
  pi1->add_option("--basepoint", opt.basepoint)->required();
  pi1->add_option("--identify", opt.identify, "enumerate the group with this coset cap");

  auto* homology = add_common(app.add_subcommand("homology", "integral homology"));
  homology->add_option("--category", opt.category);
  homology->add_option("--complex", opt.complex_name);
  homology->add_option("--max-dim", opt.max_dim);

  auto* lascar = add_common(app.add_subcommand("lascar", "automorphisms, Lst and the Lascar quotient"));
  lascar->add_option("--category", opt.category)->required();
  lascar->add_option("--sub", opt.sub, "C0 objects: none | id,id,... | prefix<=N");
  lascar->add_option("--at", opt.at, "the base object U")->required();
  lascar->add_flag("--normal-closure", opt.normal_closure, "quotient by the normal closure when Lst is not normal");

  auto* mainthm = add_common(app.add_subcommand("main-theorem", "Gal_L vs pi1 comparison"));
  mainthm->add_option("--category", opt.category)->required();
  mainthm->add_option("--sub", opt.sub);
  mainthm->add_option("--at", opt.at)->required();
  mainthm->add_option("--max-cosets", opt.max_cosets);

  auto* quillen = add_common(app.add_subcommand("quillen-a", "Theorem A certification"));
  quillen->add_option("--functor", opt.functor_name)->required();
  quillen->add_option("--side", opt.side, "slice|fiber|fiber-dual");
  quillen->add_option("--max-dim", opt.max_dim);

  auto* equiv = add_common(app.add_subcommand("equiv", "homotopy equivalence from zigzag evidence"));
  equiv->add_option("--functor", opt.functor_name)->required();
  equiv->add_option("--back", opt.functor_back)->required();
  equiv->add_option("--nat", opt.transformations, "evidence transformation names");
  equiv->add_option("--max-dim", opt.max_dim);

  auto* amal = add_common(app.add_subcommand("amalgamate", "adjoin formal amalgams"));
  amal->add_option("--category", opt.category)->required();
  amal->add_option("--span", opt.spans, "span 'apex,left,right' (repeatable; default: all AP failures)");
  amal->add_option("--rounds", opt.rounds, "alternate splitting and adjunction this many rounds");
  amal->add_option("--max-dim", opt.max_dim, "per-stage homology bound for --rounds");

  auto* karoubi = add_common(app.add_subcommand("karoubi", "idempotent splitting envelope"));
  karoubi->add_option("--category", opt.category)->required();
  karoubi->add_option("--max-dim", opt.max_dim, "homology cross-check bound");

  auto* facep = add_common(app.add_subcommand("face-poset", "face poset of a complex"));
  facep->add_option("--complex", opt.complex_name)->required();
  facep->add_option("--max-dim", opt.max_dim);

  auto* subdiv = add_common(app.add_subcommand("subdivide", "barycentric subdivision"));
  subdiv->add_option("--complex", opt.complex_name)->required();
  subdiv->add_option("--max-dim", opt.max_dim);

  CLI11_PARSE(app, argc, argv);
  opt.command = app.get_subcommands().front()->get_name();

  try {
    catlas::io::Workspace ws = catlas::io::parse_workspace(opt.files);
    catlas::io::Report report = catlas::io::run_command(ws, opt);
    std::cout << report.render(opt.format);
    return report.exit_code;
  } catch (const catlas::CatError& err) {
    catlas::io::Json j;
    j["command"] = opt.command;
    j["error"]["code"] = catlas::error_code_name(err.code());
    j["error"]["detail"] = err.detail();
    catlas::io::Report report{std::move(j), exit_code_for(err)};
    std::cout << report.render(opt.format);
    return report.exit_code;
  }
}
