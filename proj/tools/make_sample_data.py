#!/usr/bin/env python3
"""Regenerates the bundled sample data under data/sample/.

Everything here is synthetic. The output is deterministic so the files can
be committed and diffed.
"""

import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "sample"


def write_jsonl(name, rows):
    with open(OUT / name, "w", encoding="utf-8") as f:
        for r in rows:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")


# (id, text, created_at, topic, event, need); topic None marks an unrelated tweet.
CORPUS = [
    ("t01", "Baha na sa Marikina! Tulong po, lubog na ang bahay #RescuePH", "2013-08-19T07:10:00+08:00", "flood", "marikina-aug", "Rescue"),
    ("t02", "Grabe ang kain namin sa bagong restaurant sa Makati", "2013-08-19T07:30:00+08:00", None, None, None),
    ("t03", "Stranded kami sa bubong, baha tumataas sa Marikina, rescue please #RescuePH", "2013-08-19T08:05:00+08:00", "flood", "marikina-aug", "Rescue"),
    ("t04", "Need relief goods: bigas tubig de lata for flood evacuees sa Marikina #ReliefPH", "2013-08-19T09:40:00+08:00", "flood", "marikina-aug", "Relief"),
    ("t05", "Watching the basketball finals tonight, go team!", "2013-08-19T10:00:00+08:00", None, None, None),
    ("t06", "Evacuation center sa Marikina puno na, kailangan ng shelter at tent para sa baha victims", "2013-08-20T06:00:00+08:00", "flood", "marikina-aug", "Shelter"),
    ("t07", "Praying for everyone affected by the flood in Marikina #PrayForPH", "2013-08-20T12:00:00+08:00", "flood", "marikina-aug", "Prayer"),
    ("t08", "Baha pa rin sa Pasig, tulong rescue boat needed #RescuePH", "2013-08-20T13:30:00+08:00", "flood", "pasig-aug", "Rescue"),
    ("t09", "New phone arrived today, loving the camera", "2013-08-20T15:00:00+08:00", None, None, None),
    ("t10", "Donate cash via bank transfer for flood victims in Pasig #DonatePH", "2013-08-21T09:00:00+08:00", "flood", "pasig-aug", "Cash"),
    ("t11", "Typhoon Yolanda signal number 4 in Tacloban, bagyo malakas #YolandaPH", "2013-11-08T05:00:00+08:00", "typhoon", "tacloban-nov", "Others"),
    ("t12", "Storm surge sa Tacloban, bagyo winasak ang bahay, rescue trapped families #YolandaPH", "2013-11-08T09:15:00+08:00", "typhoon", "tacloban-nov", "Rescue"),
    ("t13", "Coffee and pandesal this morning, sarap", "2013-11-08T07:00:00+08:00", None, None, None),
    ("t14", "Need food and water relief goods in Tacloban after typhoon #ReliefPH #YolandaPH", "2013-11-09T08:00:00+08:00", "typhoon", "tacloban-nov", "Relief"),
    ("t15", "Typhoon survivors in Guiuan need shelter, tents and tarps #YolandaPH", "2013-11-09T14:00:00+08:00", "typhoon", "guiuan-nov", "Shelter"),
    ("t16", "Send cash donations via GCash for typhoon Yolanda victims in Tacloban", "2013-11-10T10:00:00+08:00", "typhoon", "tacloban-nov", "Cash"),
    ("t17", "Pray for Tacloban and all typhoon victims, God bless #PrayForVisayas", "2013-11-10T20:00:00+08:00", "typhoon", "tacloban-nov", "Prayer"),
    ("t18", "Traffic sa EDSA grabe, late na naman ako", "2013-11-11T08:00:00+08:00", None, None, None),
    ("t19", "Typhoon Yolanda aftermath, bagyo destroyed roads in Tacloban #YolandaPH", "2013-11-25T09:00:00+08:00", "typhoon", "tacloban-late", "Others"),
    ("t20", "Lindol! Strong earthquake sa Bohol, churches collapsed #BoholQuake", "2013-10-15T08:20:00+08:00", "quake", "bohol-oct", "Others"),
    ("t21", "Earthquake victims trapped under rubble in Bohol, rescue teams needed #BoholQuake", "2013-10-15T10:00:00+08:00", "quake", "bohol-oct", "Rescue"),
    ("t22", "New season of my favorite series starts tonight", "2013-10-15T19:00:00+08:00", None, None, None),
    ("t23", "Aftershock lindol felt in Cebu City, earthquake damage reported #BoholQuake", "2013-10-15T11:30:00+08:00", "quake", "cebu-oct", "Others"),
    ("t24", "Relief goods and water needed in Bohol earthquake evacuation sites #ReliefPH", "2013-10-16T09:00:00+08:00", "quake", "bohol-oct", "Relief"),
    ("t25", "Praying for Bohol earthquake victims #PrayForBohol", "2013-10-16T21:00:00+08:00", "quake", "bohol-oct", "Prayer"),
    ("t26", "Earthquake lindol survivors need shelter tents in Bohol #BoholQuake", "2013-10-17T07:00:00+08:00", "quake", "bohol-oct", "Shelter"),
    ("t27", "Happy birthday to my best friend!", "2013-10-17T12:00:00+08:00", None, None, None),
    ("t28", "Earthquake lindol damage, roads cracked, no location yet #BoholQuake", "2013-10-17T15:00:00+08:00", "quake", None, "Others"),
    ("t29", "Just finished my workout, feeling great", "2013-10-18T06:00:00+08:00", None, None, None),
    ("t30", "Baha flood rising again, tulong rescue needed asap #RescuePH", "2013-08-21T18:00:00+08:00", "flood", None, "Rescue"),
]

RELEVANCE_TRAIN = [
    ("Baha sa kalsada, tulong po kailangan ng rescue", "Related"),
    ("Flood waters rising, families stranded on rooftops", "Related"),
    ("Lubog na ang bahay namin sa baha, rescue please", "Related"),
    ("Typhoon signal number 3 raised, bagyo approaching", "Related"),
    ("Storm surge warning, evacuate coastal areas now", "Related"),
    ("Bagyo destroyed houses, relief goods needed", "Related"),
    ("Strong earthquake lindol, buildings collapsed", "Related"),
    ("Aftershock felt again, earthquake damage everywhere", "Related"),
    ("Evacuation center needs food water and tents", "Related"),
    ("Praying for the victims of the typhoon", "Related"),
    ("Donate cash for flood and typhoon victims", "Related"),
    ("Relief operations ongoing for disaster survivors", "Related"),
    ("Trapped under rubble after the earthquake, rescue needed", "Related"),
    ("Landslide and flood after heavy rain, tulong", "Related"),
    ("Shelter needed for displaced families after bagyo", "Related"),
    ("Typhoon victims need water and food relief", "Related"),
    ("Nasira ang bahay dahil sa lindol", "Related"),
    ("Flood rescue boats deployed to stranded residents", "Related"),
    ("Kumain kami sa bagong restaurant, sarap", "Unrelated"),
    ("Watching basketball finals with friends tonight", "Unrelated"),
    ("New phone camera is amazing", "Unrelated"),
    ("Coffee and pandesal for breakfast", "Unrelated"),
    ("Traffic sa EDSA, late na naman", "Unrelated"),
    ("Happy birthday to my best friend", "Unrelated"),
    ("Finished my workout at the gym", "Unrelated"),
    ("New season of the series starts tonight", "Unrelated"),
    ("Shopping at the mall this weekend", "Unrelated"),
    ("Concert tickets sold out already", "Unrelated"),
    ("Studying for exams all night", "Unrelated"),
    ("Movie marathon with the family", "Unrelated"),
    ("Grabe ang init ngayon, summer na", "Unrelated"),
    ("Love this song so much", "Unrelated"),
]

NEED_VOCAB = {
    "Rescue": ["rescue", "trapped", "stranded", "roof", "boat", "saklolo", "bubong", "lubog"],
    "Relief": ["relief", "food", "water", "goods", "bigas", "tubig", "delata", "pagkain"],
    "Shelter": ["shelter", "tent", "tarp", "evacuation", "center", "matutuluyan", "bahay", "tirahan"],
    "Cash": ["cash", "donate", "donation", "gcash", "bank", "transfer", "pera", "fund"],
    "Prayer": ["pray", "praying", "prayers", "god", "bless", "dasal", "panalangin", "amen"],
    "Others": ["signal", "update", "news", "damage", "roads", "closed", "balita", "report"],
}
SHARED = ["typhoon", "bagyo", "flood", "baha", "earthquake", "lindol", "victims", "tacloban"]


def need_docs(per_class, offset):
    rows = []
    for label, vocab in NEED_VOCAB.items():
        for i in range(per_class):
            k = i + offset
            words = [vocab[k % 8], vocab[(k * 3 + 1) % 8], vocab[(k * 5 + 2) % 8], SHARED[(k + len(label)) % 8]]
            if k % 2 == 0:
                words.append(SHARED[(k * 7) % 8])
            rows.append((" ".join(words), label))
    return rows


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write_jsonl("corpus.jsonl", [{"id": i, "text": t, "created_at": ts} for i, t, ts, *_ in CORPUS])
    write_jsonl("topic_gold.jsonl", [{"id": i, "label": tp} for i, _, _, tp, _, _ in CORPUS if tp])
    write_jsonl("event_gold.jsonl", [{"id": i, "label": ev} for i, _, _, tp, ev, _ in CORPUS if tp and ev])
    write_jsonl("need_gold.jsonl", [{"id": i, "label": nd} for i, _, _, tp, _, nd in CORPUS if tp])
    write_jsonl("relevance_gold.jsonl",
                [{"id": i, "label": "Related" if tp else "Unrelated"} for i, _, _, tp, _, _ in CORPUS])
    write_jsonl("relevance_train.jsonl", [{"text": t, "label": l} for t, l in RELEVANCE_TRAIN])
    write_jsonl("needs_train.jsonl", [{"text": t, "label": l} for t, l in need_docs(8, 0)])

    # Labeled need corpus for the gamma sweep: 10 tweets per class.
    eval_rows = need_docs(10, 3)
    write_jsonl("needs_eval_corpus.jsonl", [
        {"id": f"n{idx:03d}", "text": t, "created_at": f"2013-11-{10 + idx % 15:02d}T12:00:00+08:00"}
        for idx, (t, _) in enumerate(eval_rows)])
    write_jsonl("needs_eval_gold.jsonl", [{"id": f"n{idx:03d}", "label": l} for idx, (_, l) in enumerate(eval_rows)])

    with open(OUT / "config.json", "w", encoding="utf-8") as f:
        json.dump({
            "topic_threshold": 0.01,
            "st_threshold": 0.8,
            "iat_limit_seconds": 604800,
            "label_top_k": 5,
        }, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main()
