#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fnhol/document.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Standard cocycles from Fenchel-Nielsen coordinates"};
  app.require_subcommand(1, 1);

  std::string input;
  fnhol::CommandOptions opt;
  std::string word;
  double tolerance = 0.0;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "surface document (JSON)")->required();
    sub->add_option("--tolerance", tolerance, "verification tolerance");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  add_common(app.add_subcommand("verify", "face residuals and standardness"));
  auto* hol = app.add_subcommand("holonomy", "holonomy of an edge word");
  add_common(hol);
  hol->add_option("--word", word, "edge names such as 'p1.b00 p1.b01'")->required();
  add_common(app.add_subcommand("fn", "Fenchel-Nielsen round trip"));
  add_common(app.add_subcommand("wp", "Weil-Petersson pairing matrix"));
  auto* spin = app.add_subcommand("spin", "spin lifts and rotation numbers");
  add_common(spin);
  spin->add_flag("--list", opt.list, "list every class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  opt.command = sub->get_name();
  if (opt.command == "holonomy") opt.word = word;
  if (sub->get_option("--tolerance")->count() > 0) opt.tolerance = tolerance;
  opt.format = format == "json" ? fnhol::OutputFormat::Json : fnhol::OutputFormat::Text;

  std::ifstream in(input, std::ios::binary);
  if (!in) {
    std::cerr << "error [usage]: cannot read " << input << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  const fnhol::Report report = fnhol::run_text(buf.str(), opt);
  (report.exit_code == 2 ? std::cerr : std::cout) << report.output;
  return report.exit_code;
}
