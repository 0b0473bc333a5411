// Runs compiled clauses under Tau Prolog.
// stdin: program text, a line `%% goals`, then one goal per line using the
// variable Truth_value. stdout: one line per goal, the Truth_value results
// of every solution separated by spaces.
const pl = require("tau-prolog");

const input = require("fs").readFileSync(0, "utf8");
const [program, goalText] = input.split("\n%% goals\n");
const goals = goalText.split("\n").filter((g) => g.trim() !== "");

const session = pl.create(1000000);
session.consult(program, {
  success: () => next(0),
  error: (e) => fail("consult: " + session.format_answer(e)),
});

function fail(msg) {
  process.stderr.write(msg + "\n");
  process.exit(1);
}

function next(i) {
  if (i === goals.length) return;
  const goal = "findall(Truth_value, (" + goals[i] + "), Vs).";
  session.query(goal, {
    success: () =>
      session.answer({
        success: (a) => {
          const vs = a.links.Vs.toJavaScript();
          process.stdout.write(vs.join(" ") + "\n");
          next(i + 1);
        },
        fail: () => fail("no answer for " + goals[i]),
        error: (e) => fail(goals[i] + ": " + session.format_answer(e)),
        limit: () => fail("step limit on " + goals[i]),
      }),
    error: (e) => fail("parse " + goals[i] + ": " + session.format_answer(e)),
  });
}
