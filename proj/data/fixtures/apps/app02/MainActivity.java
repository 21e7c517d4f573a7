package com.example.app02;

import android.app.Activity;
import android.os.Bundle;
import android.widget.TextView;

public class MainActivity extends Activity {
    private int clicks = 0;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.main);
        TextView title = (TextView) findViewById(R.id.title);
        title.setText("MainActivity");
    }

    public void onClick(View v) {
        clicks = clicks + 1;
        if (clicks > 3) {
            finish();
        }
    }
}
